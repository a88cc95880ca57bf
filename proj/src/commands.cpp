#include "trop/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "trop/generator.hpp"
#include "trop/io.hpp"

namespace trop {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}

void require_valid_or_report(const Instance& inst) {
  std::vector<Diagnostic> diags = validate_all(inst.basis);
  if (diags.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const Diagnostic& d : diags) msg << " [" << d.message << "]";
  throw InvalidInput(msg.str());
}

}  // namespace

int cmd_trop(const std::string& input_path, const Strategy& strategy, bool multiplicities,
             int threads, const std::string& output_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(input_path);
    require_valid_or_report(inst);
    Projection result = run(inst, strategy, threads);
    if (!multiplicities)
      for (ProjPoint& p : result.points) p.mult = 1;
    write_text(output_path, serialize_result(result, inst.basis.vars()), out);
    return kExitOk;
  });
}

int cmd_project(const std::string& input_path, const std::vector<int>& coords, int threads,
                const std::string& output_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(input_path);
    require_valid_or_report(inst);
    const int n = inst.basis.vars();
    std::vector<int> sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || sorted.front() < 1 || sorted.back() > n)
      throw InvalidInput("coordinates must be distinct labels in 1..n");

    std::vector<Projection> initial = initial_projections(inst);
    Projection result;
    if (sorted.size() == 1) {
      result = initial[static_cast<std::size_t>(sorted.front() - 1)];
    } else {
      std::vector<Projection> inputs;
      inputs.reserve(sorted.size());
      for (int k : sorted) inputs.push_back(initial[static_cast<std::size_t>(k - 1)]);
      (void)threads;
      result = glue(inst.basis, inst.prime, inputs).proj;
    }
    write_text(output_path, serialize_result(result, n), out);
    return kExitOk;
  });
}

int cmd_check(const std::string& input_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(input_path);
    std::vector<Diagnostic> diags = validate_all(inst.basis);
    if (diags.empty()) {
      out << "ok\n";
      return kExitOk;
    }
    for (const Diagnostic& d : diags) out << d.message << "\n";
    return kExitInvalidInput;
  });
}

int cmd_generate(int d, int n, std::uint64_t seed, std::uint64_t prime,
                 const std::string& output_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    PrimeContext ctx(prime);
    Generated g = generate_instance(d, n, seed, ctx);
    write_text(output_path, serialize_instance(g.inst), out);
    return kExitOk;
  });
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err,
              const BenchRunner& runner) {
  return guarded(err, [&] {
    if (cfg.degrees.empty() || cfg.nvars.empty() || cfg.strategies.empty() || cfg.reps < 1)
      throw InvalidInput("bench needs degrees, variable counts, strategies and reps >= 1");
    const BenchRunner r = runner ? runner : [](const Instance& i, const Strategy& s, int th) {
      return run(i, s, th);
    };
    PrimeContext prime(cfg.prime);
    std::ostringstream csv;
    csv << "d,n,strategy,seed,wall-time-ms,points,agree\n";
    bool all_agree = true;
    for (int d : cfg.degrees) {
      for (int n : cfg.nvars) {
        for (int rep = 0; rep < cfg.reps; ++rep) {
          const std::uint64_t cell_seed =
              derive_seed(cfg.seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n),
                          static_cast<std::uint64_t>(rep));
          Generated g = generate_instance(d, n, cell_seed, prime);
          std::vector<Projection> results;
          std::vector<double> times;
          for (const Strategy& s : cfg.strategies) {
            auto t0 = std::chrono::steady_clock::now();
            results.push_back(r(g.inst, s, cfg.threads));
            auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
          }
          for (std::size_t i = 0; i < cfg.strategies.size(); ++i) {
            const bool agree = results[i] == results.front();
            all_agree = all_agree && agree;
            csv << d << ',' << n << ',' << cfg.strategies[i].name() << ',' << cell_seed << ','
                << times[i] << ',' << results[i].points.size() << ','
                << (agree ? "true" : "false") << '\n';
          }
        }
      }
    }
    write_text(cfg.output, csv.str(), out);
    return all_agree ? kExitOk : kExitVerificationFailure;
  });
}

}  // namespace trop
