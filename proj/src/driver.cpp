#include "trop/driver.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <map>

#include "trop/errors.hpp"

namespace trop {

Strategy Strategy::regular_tree(int k) {
  if (k < 2) throw InvalidArity("regular-tree fan-in must be at least 2");
  return {Kind::RegularTree, k};
}

Strategy Strategy::parse(const std::string& s) {
  if (s == "one-projection") return one_projection();
  if (s == "sequential") return sequential();
  if (s == "overlap") return overlap();
  const std::string prefix = "regular-tree=";
  if (s.rfind(prefix, 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(s.substr(prefix.size()), &used);
      if (used != s.size() - prefix.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw ParseError("bad strategy: '" + s + "'");
    }
    return regular_tree(k);
  }
  throw ParseError("bad strategy: '" + s + "'");
}

std::vector<Strategy> Strategy::all() {
  return {one_projection(), sequential(), regular_tree(2), overlap()};
}

std::string Strategy::name() const {
  switch (kind) {
    case Kind::OneProjection:
      return "one-projection";
    case Kind::Sequential:
      return "sequential";
    case Kind::RegularTree:
      return "regular-tree=" + std::to_string(arity);
    case Kind::Overlap:
      return "overlap";
  }
  return "";
}

namespace {

void require_valid(const ShapeBasis& b) {
  if (auto diag = validate(b)) throw InvalidInput(diag->message);
}

Projection singleton_projection(int label, const UniPoly& elim, const PrimeContext& prime) {
  TropUniv tv = trop_univariate(elim, prime);
  Projection p;
  p.coords = {label};
  for (const TropPoint1& pt : tv.points) p.points.push_back({{pt.w}, pt.mult});
  p.sort_canonical();
  return p;
}

}  // namespace

std::vector<Projection> initial_projections(const Instance& inst) {
  require_valid(inst.basis);
  const int n = inst.basis.vars();
  std::vector<Projection> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) {
    UniPoly elim = eliminant(q_reduce(inst.basis.tail(k), inst.basis.ring()));
    out.push_back(singleton_projection(k, elim, inst.prime));
  }
  out.push_back(singleton_projection(n, inst.basis.fn(), inst.prime));
  return out;
}

Schedule strategy_schedule(int n, const Strategy& s) {
  assert(n >= 2);
  if (s.kind == Strategy::Kind::RegularTree && s.arity < 2)
    throw InvalidArity("regular-tree fan-in must be at least 2");

  Schedule sch;
  for (int k = 1; k <= n; ++k) sch.slot_coords.push_back({k});

  auto new_slot = [&sch](std::vector<int> coords) {
    sch.slot_coords.push_back(std::move(coords));
    return static_cast<int>(sch.slot_coords.size()) - 1;
  };
  auto union_coords = [&sch](const std::vector<int>& slots) {
    std::vector<int> acc;
    for (int s_id : slots) {
      std::vector<int> u;
      const auto& c = sch.slot_coords[static_cast<std::size_t>(s_id)];
      std::set_union(acc.begin(), acc.end(), c.begin(), c.end(), std::back_inserter(u));
      acc = std::move(u);
    }
    return acc;
  };

  switch (s.kind) {
    case Strategy::Kind::OneProjection: {
      std::vector<int> inputs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) inputs[static_cast<std::size_t>(i)] = i;
      int out = new_slot(union_coords(inputs));
      sch.batches.push_back({GlueTask{std::move(inputs), out}});
      sch.result_slot = out;
      break;
    }
    case Strategy::Kind::Sequential: {
      int prev = 0;  // slot of {1}
      for (int k = 2; k <= n; ++k) {
        std::vector<int> inputs{prev, k - 1};
        int out = new_slot(union_coords(inputs));
        sch.batches.push_back({GlueTask{std::move(inputs), out}});
        prev = out;
      }
      sch.result_slot = prev;
      break;
    }
    case Strategy::Kind::RegularTree: {
      std::vector<int> level(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) level[static_cast<std::size_t>(i)] = i;
      while (level.size() > 1) {
        std::vector<GlueTask> batch;
        std::vector<int> next;
        for (std::size_t i = 0; i < level.size(); i += static_cast<std::size_t>(s.arity)) {
          std::size_t hi = std::min(level.size(), i + static_cast<std::size_t>(s.arity));
          if (hi - i == 1) {
            next.push_back(level[i]);  // odd chunk passes through
            continue;
          }
          std::vector<int> inputs(level.begin() + static_cast<std::ptrdiff_t>(i),
                                  level.begin() + static_cast<std::ptrdiff_t>(hi));
          int out = new_slot(union_coords(inputs));
          batch.push_back(GlueTask{std::move(inputs), out});
          next.push_back(out);
        }
        sch.batches.push_back(std::move(batch));
        level = std::move(next);
      }
      sch.result_slot = level.front();
      break;
    }
    case Strategy::Kind::Overlap: {
      // batch i glues {1..i} with {1..i-1, j} for every j > i
      int spine = 0;  // slot of {1}
      std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
      for (int j = 2; j <= n; ++j) side[static_cast<std::size_t>(j)] = j - 1;
      for (int i = 1; i < n; ++i) {
        std::vector<GlueTask> batch;
        int next_spine = -1;
        std::vector<int> next_side(static_cast<std::size_t>(n) + 1, -1);
        for (int j = i + 1; j <= n; ++j) {
          std::vector<int> inputs{spine, side[static_cast<std::size_t>(j)]};
          int out = new_slot(union_coords(inputs));
          batch.push_back(GlueTask{std::move(inputs), out});
          if (j == i + 1)
            next_spine = out;
          else
            next_side[static_cast<std::size_t>(j)] = out;
        }
        sch.batches.push_back(std::move(batch));
        spine = next_spine;
        side = std::move(next_side);
      }
      sch.result_slot = spine;
      break;
    }
  }
  return sch;
}

namespace {

Projection run_impl(const Instance& inst, const Strategy& strat, int threads) {
  require_valid(inst.basis);
  const int n = inst.basis.vars();
  std::vector<Projection> initial = initial_projections(inst);
  if (n == 1) return initial.front();

  Schedule sch = strategy_schedule(n, strat);
  std::vector<Projection> slots(sch.slot_coords.size());
  for (int i = 0; i < n; ++i) slots[static_cast<std::size_t>(i)] = std::move(initial[static_cast<std::size_t>(i)]);

  const bool reuse_seed = strat.kind == Strategy::Kind::Sequential;
  SlimVector seed;
  bool have_seed = false;

  for (const std::vector<GlueTask>& batch : sch.batches) {
    const int count = static_cast<int>(batch.size());
    std::vector<GlueResult> results(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));

    auto body = [&](int t) {
      try {
        const GlueTask& task = batch[static_cast<std::size_t>(t)];
        std::vector<Projection> inputs;
        inputs.reserve(task.inputs.size());
        for (int s_id : task.inputs) inputs.push_back(slots[static_cast<std::size_t>(s_id)]);
        GlueOptions opt;
        if (reuse_seed && have_seed) opt.seed = &seed;
        results[static_cast<std::size_t>(t)] = glue(inst.basis, inst.prime, inputs, opt);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    };

    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
      for (int t = 0; t < count; ++t) body(t);
    } else {
      for (int t = 0; t < count; ++t) body(t);
    }
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);

    // commit in task order so the run is deterministic
    for (int t = 0; t < count; ++t) {
      const GlueTask& task = batch[static_cast<std::size_t>(t)];
      slots[static_cast<std::size_t>(task.output)] = std::move(results[static_cast<std::size_t>(t)].proj);
      if (reuse_seed) {
        seed = std::move(results[static_cast<std::size_t>(t)].u);
        have_seed = true;
      }
    }
  }
  return std::move(slots[static_cast<std::size_t>(sch.result_slot)]);
}

}  // namespace

Projection run_serial(const Instance& inst, const Strategy& s) { return run_impl(inst, s, 1); }

Projection run(const Instance& inst, const Strategy& s, int threads) {
  if (threads <= 1) return run_serial(inst, s);
  return run_impl(inst, s, threads);
}

std::optional<Projection> split_oracle(const Instance& inst) {
  require_valid(inst.basis);
  const ShapeBasis& b = inst.basis;
  std::map<Rat, int> roots = rational_roots(b.fn());
  int total = 0;
  for (const auto& [r, m] : roots) total += m;
  if (total != b.degree()) return std::nullopt;

  const int n = b.vars();
  std::map<std::vector<Rat>, int> points;
  for (const auto& [r, m] : roots) {
    std::vector<Rat> w(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k) {
      Rat val = b.tail(k).evaluate(r);
      if (val.is_zero()) throw ZeroCoordinate();
      w[static_cast<std::size_t>(k - 1)] = valuation(val, inst.prime);
    }
    w[static_cast<std::size_t>(n - 1)] = valuation(r, inst.prime);  // r != 0 since f_n(0) != 0
    points[std::move(w)] += m;
  }
  Projection out;
  for (int k = 1; k <= n; ++k) out.coords.push_back(k);
  for (const auto& [w, m] : points) out.points.push_back({w, m});
  return out;
}

}  // namespace trop
