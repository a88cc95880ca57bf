// End-to-end acceptance checks. Each criterion prints exactly one line:
//   criterion N: pass (...)   or   criterion N: FAIL (...)
// The process exits nonzero if any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trop/commands.hpp"
#include "trop/generator.hpp"
#include "trop/io.hpp"
#include "trop/resultant.hpp"

using namespace trop;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

ShapeBasis quartic_basis() {
  return ShapeBasis(3, UniPoly{Rat(2), Rat(1), Rat(1), Rat(1), Rat(2)},
                    {UniPoly{Rat(0), Rat(4)}, UniPoly{Rat(0), Rat(2)}});
}

Projection quartic_expected() {
  Projection p;
  p.coords = {1, 2, 3};
  p.points = {{{Rat(1), Rat(0), Rat(-1)}, 1},
              {{Rat(2), Rat(1), Rat(0)}, 2},
              {{Rat(3), Rat(2), Rat(1)}, 1}};
  return p;
}

SlimVector sv(std::vector<long> u, int ell) {
  SlimVector v;
  v.u = std::move(u);
  v.ell = ell;
  return v;
}

std::string temp_path(const std::string& tag) {
  return (std::filesystem::temp_directory_path() /
          ("tropproj_accept_" + std::to_string(::getpid()) + "_" + tag))
      .string();
}

QElt q_horner(const UniPoly& f, const QElt& at) {
  QElt acc = q_reduce(UniPoly(), at.ctx());
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * at + q_reduce(UniPoly::constant(f.coeff(i)), at.ctx());
  return acc;
}

Rat small_rat(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 19) - 9;
  long den = 1 + static_cast<long>(rng() % 4);
  return Rat(Int(num), Int(den));
}

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
  int deg = static_cast<int>(rng() % (max_deg + 1));
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = small_rat(rng);
  return UniPoly(std::move(c));
}

UniPoly random_modulus(std::mt19937_64& rng, int deg) {
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = small_rat(rng);
  while (c[0].is_zero()) c[0] = small_rat(rng);
  while (c.back().is_zero()) c.back() = small_rat(rng);
  return UniPoly(std::move(c));
}

ShapeBasis random_valid_basis(std::mt19937_64& rng, int n, int d) {
  for (;;) {
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = Rat(Int(static_cast<long>(rng() % 19) - 9));
    while (c[0].is_zero()) c[0] = Rat(Int(static_cast<long>(rng() % 9) + 1));
    while (c.back().is_zero()) c.back() = Rat(Int(static_cast<long>(rng() % 9) + 1));
    std::vector<UniPoly> tail;
    for (int k = 1; k < n; ++k) {
      std::vector<Rat> t(static_cast<std::size_t>(d));
      for (auto& v : t) v = Rat(Int(static_cast<long>(rng() % 19) - 9));
      tail.emplace_back(std::move(t));
    }
    ShapeBasis b(n, UniPoly(std::move(c)), std::move(tail));
    if (validate_all(b).empty()) return b;
  }
}

// --- criterion 1: worked example end-to-end through the CLI entry points ---

Outcome criterion1() {
  const std::string in_path = temp_path("c1_in.json");
  {
    std::ofstream out(in_path);
    out << serialize_instance({quartic_basis(), PrimeContext(2)});
  }
  const Projection expected = quartic_expected();
  double worst = 0;
  for (const Strategy& s : Strategy::all()) {
    const std::string out_path = temp_path("c1_out.json");
    std::ostringstream out, err;
    auto t0 = Clock::now();
    int rc = cmd_trop(in_path, s, true, 1, out_path, out, err);
    double t = ms_since(t0);
    worst = std::max(worst, t);
    if (rc != kExitOk)
      return {false, s.name() + " exited " + std::to_string(rc) + ": " + err.str()};
    std::ifstream res(out_path);
    std::ostringstream buf;
    buf << res.rdbuf();
    std::filesystem::remove(out_path);
    if (parse_result(buf.str()) != expected)
      return {false, s.name() + " returned a different variety"};
  }
  std::filesystem::remove(in_path);
  if (worst >= 1000.0)
    return {false, "slowest strategy took " + std::to_string(worst) + " ms (limit 1000)"};
  std::ostringstream d;
  d << "all 4 strategies exact, slowest " << worst << " ms";
  return {true, d.str()};
}

// --- criterion 2: worked example intermediates ---

Outcome criterion2() {
  ShapeBasis b = quartic_basis();
  ShapeBasis t1 = slim_transform(b, sv({-1, 3, 0}, 1));
  if (t1.tail(1) != UniPoly{Rat::parse("-1/8"), Rat::parse("-1/8"), Rat::parse("-3/8"),
                            Rat::parse("1/4")})
    return {false, "transform by (-1,3,0) gave the wrong tail"};
  ShapeBasis t2 = slim_transform(b, sv({-1, 0, 3}, 1));
  if (t2.tail(1) != UniPoly{Rat(-1), Rat(-1), Rat(-3), Rat(2)})
    return {false, "transform by (-1,0,3) gave the wrong tail"};
  UniPoly e1 = transform_eliminant(b, sv({-1, 3, 0}, 1));
  UniPoly want1{Rat::parse("1/2"), Rat::parse("3/4"), Rat::parse("7/2"), Rat(3), Rat(8)};
  if (e1 != want1.monic()) return {false, "eliminant of the (-1,3,0) transform is wrong"};
  UniPoly e2 = transform_eliminant(b, sv({-1, 0, 3}, 1));
  UniPoly want2{Rat(2048), Rat(384), Rat(224), Rat(24), Rat(8)};
  if (e2 != want2.monic()) return {false, "eliminant of the (-1,0,3) transform is wrong"};
  return {true, "both transforms and both eliminants exact"};
}

// --- criterion 3: univariate tropicalization goldens ---

Outcome criterion3() {
  PrimeContext p2(2);
  struct Golden {
    UniPoly f;
    std::vector<std::pair<long, int>> pts;
  };
  const std::vector<Golden> goldens = {
      {UniPoly{Rat(2), Rat(1), Rat(1), Rat(1), Rat(2)}, {{-1, 1}, {0, 2}, {1, 1}}},
      {UniPoly{Rat::parse("1/2"), Rat::parse("3/4"), Rat::parse("7/2"), Rat(3), Rat(8)},
       {{-3, 1}, {-1, 2}, {1, 1}}},
      {UniPoly{Rat(2048), Rat(384), Rat(224), Rat(24), Rat(8)}, {{0, 1}, {2, 2}, {4, 1}}},
  };
  for (std::size_t g = 0; g < goldens.size(); ++g) {
    TropUniv tv = trop_univariate(goldens[g].f, p2);
    if (tv.points.size() != goldens[g].pts.size())
      return {false, "polynomial " + std::to_string(g + 1) + ": wrong point count"};
    for (std::size_t i = 0; i < tv.points.size(); ++i) {
      if (tv.points[i].w != Rat(goldens[g].pts[i].first) ||
          tv.points[i].mult != goldens[g].pts[i].second)
        return {false, "polynomial " + std::to_string(g + 1) + ": wrong points"};
    }
  }
  return {true, "3 tropicalizations exact"};
}

// --- criterion 4: cross-strategy agreement on generated instances ---

Outcome criterion4() {
  struct Cell {
    int d, n, rep;
    std::uint64_t p;
  };
  std::vector<Cell> cells;
  for (int d : {2, 4, 6, 8})
    for (int n : {2, 3, 5})
      for (std::uint64_t p : {2ull, 3ull})
        for (int rep = 0; rep < 9; ++rep) cells.push_back({d, n, rep, p});

  auto t0 = Clock::now();
  std::vector<std::string> failures(cells.size());
  const int count = static_cast<int>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    const Cell& c = cells[static_cast<std::size_t>(i)];
    try {
      PrimeContext prime(c.p);
      std::uint64_t seed = derive_seed(0xACCE5501ull + c.p, static_cast<std::uint64_t>(c.d),
                                       static_cast<std::uint64_t>(c.n),
                                       static_cast<std::uint64_t>(c.rep));
      Instance inst = generate_instance(c.d, c.n, seed, prime).inst;
      Projection ref = run_serial(inst, Strategy::one_projection());
      bool ok = ref.total_multiplicity() == c.d;
      for (const Strategy& s : {Strategy::sequential(), Strategy::regular_tree(2),
                                Strategy::overlap()})
        ok = ok && run_serial(inst, s) == ref;
      if (!ok)
        failures[static_cast<std::size_t>(i)] =
            "d=" + std::to_string(c.d) + " n=" + std::to_string(c.n) +
            " p=" + std::to_string(c.p) + " rep=" + std::to_string(c.rep);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = std::string("exception: ") + e.what();
    }
  }
  double secs = ms_since(t0) / 1000.0;
  for (const std::string& f : failures)
    if (!f.empty()) return {false, f};
  if (secs >= 300.0)
    return {false, "took " + std::to_string(secs) + " s (limit 300)"};
  std::ostringstream d;
  d << cells.size() << " instances, 4 strategies identical, " << secs << " s";
  return {true, d.str()};
}

// --- criterion 5: agreement with the split-instance oracle ---

Outcome criterion5() {
  std::mt19937_64 rng(0x5EED5);
  int done = 0, attempts = 0;
  while (done < 100) {
    if (++attempts > 10000) return {false, "could not build 100 split instances"};
    const std::uint64_t p = (rng() % 2 == 0) ? 2 : 3;
    PrimeContext prime(p);
    int d = 2 + static_cast<int>(rng() % 5);
    int n = 1 + static_cast<int>(rng() % 3);
    UniPoly fn{Rat(1)};
    for (int i = 0; i < d; ++i) {
      long e = static_cast<long>(rng() % 7) - 3;
      long unit = 1 + static_cast<long>(rng() % 9);
      while (unit % static_cast<long>(p) == 0) ++unit;
      Int num(unit), den(1);
      for (long k = 0; k < (e >= 0 ? e : -e); ++k)
        (e >= 0 ? num : den) *= static_cast<long>(p);
      fn = fn * UniPoly{-Rat(num, den), Rat(1)};
    }
    std::vector<UniPoly> tail;
    for (int k = 1; k < n; ++k) {
      std::vector<Rat> c(static_cast<std::size_t>(d));
      for (auto& v : c) v = Rat(static_cast<long>(rng() % 15) - 7);
      tail.emplace_back(std::move(c));
    }
    Instance inst{ShapeBasis(n, fn, tail), prime};
    if (!validate_all(inst.basis).empty()) continue;
    std::optional<Projection> oracle;
    try {
      oracle = split_oracle(inst);
    } catch (const ZeroCoordinate&) {
      continue;
    }
    if (!oracle) return {false, "constructed instance did not split"};
    if (run_serial(inst, Strategy::overlap()) != *oracle)
      return {false, "run disagrees with the oracle on instance " + std::to_string(done)};
    ++done;
  }
  return {true, "100 split instances match the root-reading oracle"};
}

// --- criterion 6: eliminant against the resultant route ---

Outcome criterion6() {
  std::mt19937_64 rng(0x5EED6);
  int direct = 0, reversed = 0;
  while (direct < 100 || reversed < 100) {
    QuotientCtx ctx(random_modulus(rng, 2 + static_cast<int>(rng() % 5)));
    UniPoly g = random_poly(rng, ctx.degree() + 1);
    QElt a = q_reduce(g, ctx);
    if (eliminant(a) != image_resultant(ctx.modulus(), g).monic())
      return {false, "characteristic-polynomial eliminant differs from the resultant"};
    ++direct;
    try {
      UniPoly via_inverse = eliminant(q_inverse(a));
      if (reversal_eliminant(a) != via_inverse)
        return {false, "coefficient reversal differs from the direct inverse eliminant"};
      ++reversed;
    } catch (const NonInvertible&) {
    }
  }
  return {true, std::to_string(direct) + " resultant matches, " + std::to_string(reversed) +
                    " reversal matches"};
}

// --- criterion 7: algebraic invariants ---

Outcome criterion7() {
  std::mt19937_64 rng(0x5EED7);
  for (int it = 0; it < 100; ++it) {
    QuotientCtx ctx(random_modulus(rng, 2 + static_cast<int>(rng() % 5)));
    QElt a = q_reduce(random_poly(rng, ctx.degree() + 2), ctx);
    if (!q_horner(eliminant(a), a).is_zero())
      return {false, "an eliminant does not annihilate its element"};
  }
  for (int it = 0; it < 100; ++it) {
    UniPoly f = random_poly(rng, 6), h = random_poly(rng, 6);
    if (f.is_zero() && h.is_zero()) continue;
    Xgcd e = xgcd(f, h);
    if (e.s * f + e.t * h != e.g) return {false, "a Bezout identity fails"};
    if (!f.is_zero() && !divrem(f, e.g).second.is_zero())
      return {false, "a gcd does not divide its first argument"};
    if (!h.is_zero() && !divrem(h, e.g).second.is_zero())
      return {false, "a gcd does not divide its second argument"};
  }
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng() % 3);
    ShapeBasis b = random_valid_basis(rng, n, 2 + static_cast<int>(rng() % 4));
    int ell = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    SlimVector u = SlimVector::minus_e(ell, n);
    for (int i = 1; i <= n; ++i)
      if (i != ell) u.u[static_cast<std::size_t>(i - 1)] = static_cast<long>(rng() % 4);
    ShapeBasis t = slim_transform(b, u);
    if (transform_multiplier(b, u) * q_reduce(t.tail(ell), b.ring()) !=
        q_reduce(b.tail(ell), b.ring()))
      return {false, "a transform identity fails"};
  }
  for (int it = 0; it < 100; ++it) {
    int d = 2 + static_cast<int>(rng() % 4);
    int n = 2 + static_cast<int>(rng() % 2);
    PrimeContext prime(it % 2 == 0 ? 2 : 3);
    Instance inst = generate_instance(d, n, rng(), prime).inst;
    if (run_serial(inst, Strategy::overlap()).total_multiplicity() != d)
      return {false, "multiplicities do not sum to the degree"};
  }
  return {true, "4 invariant families x 100 randomized checks"};
}

// --- criterion 8: slope search minimality and bound ---

Outcome criterion8() {
  std::mt19937_64 rng(0x5EED8);
  auto injective = [](const std::vector<Rat>& xs, const std::vector<Rat>& ys, long m) {
    std::set<Rat> seen;
    for (const Rat& a : xs)
      for (const Rat& b : ys)
        if (!seen.insert(a - Rat(m) * b).second) return false;
    return true;
  };
  int done = 0;
  while (done < 100) {
    int d = 2 + static_cast<int>(rng() % 5);
    int n = 2 + static_cast<int>(rng() % 2);
    PrimeContext prime(rng() % 2 == 0 ? 2 : 3);
    Instance inst = generate_instance(d, n, rng(), prime).inst;
    std::vector<Projection> initial = initial_projections(inst);
    const Projection& base = initial.front();
    const Projection& extra = initial.back();  // the last variable's projection
    std::vector<Rat> xs, ys;
    for (const ProjPoint& p : base.points) xs.push_back(p.w.front());
    for (const ProjPoint& p : extra.points) ys.push_back(p.w.front());
    long m = find_injective_m_slopes(xs, ys);
    const long bound = static_cast<long>(d) * d * (static_cast<long>(d) * d - 1) / 2;
    if (m > bound) return {false, "m exceeds the pair-count bound"};
    if (!injective(xs, ys, m)) return {false, "returned m does not separate"};
    for (long lower = 0; lower < m; ++lower)
      if (injective(xs, ys, lower)) return {false, "a smaller m already separates"};
    // the full glue uses exactly this m on top of the base transform
    GlueResult g = glue(inst.basis, inst.prime, {base, extra});
    SlimVector expect = SlimVector::minus_e(1, n);
    expect.u[static_cast<std::size_t>(n - 1)] = m;
    if (!(g.u == expect)) return {false, "glue picked a different slope"};
    ++done;
  }
  return {true, "100 glues: m minimal and within the bound"};
}

// --- criterion 9: performance smoke on a large instance ---

Outcome criterion9() {
  PrimeContext p2(2);
  auto t0 = Clock::now();
  Instance inst = generate_instance(16, 5, 0x5EED9, p2).inst;
  Projection out = run_serial(inst, Strategy::overlap());
  double secs = ms_since(t0) / 1000.0;
  if (out.total_multiplicity() != 16) return {false, "multiplicities do not sum to 16"};
  if (secs >= 600.0)
    return {false, "took " + std::to_string(secs) + " s (limit 600)"};
  std::ostringstream d;
  d << "degree 16 in 5 variables, single-threaded, " << secs << " s";
  return {true, d.str()};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    Outcome (*fn)();
  };
  const std::vector<Entry> entries = {
      {1, "worked example end-to-end", criterion1},
      {2, "worked example intermediates", criterion2},
      {3, "univariate tropicalization goldens", criterion3},
      {4, "cross-strategy agreement", criterion4},
      {5, "split-oracle equivalence", criterion5},
      {6, "eliminant cross-oracle", criterion6},
      {7, "algebraic invariants", criterion7},
      {8, "slope minimality and bound", criterion8},
      {9, "performance smoke", criterion9},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::cout << "criterion " << e.id << ": " << (o.pass ? "pass" : "FAIL") << " (" << e.label
              << ": " << o.detail << ")\n";
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
