#include <doctest.h>

#include <random>
#include <set>

#include "trop/driver.hpp"
#include "trop/generator.hpp"

using trop::Instance;
using trop::PrimeContext;
using trop::Projection;
using trop::Rat;
using trop::Schedule;
using trop::ShapeBasis;
using trop::Strategy;
using trop::UniPoly;

namespace {

Instance quartic_instance() {
  return {ShapeBasis(3, UniPoly{Rat(2), Rat(1), Rat(1), Rat(1), Rat(2)},
                     {UniPoly{Rat(0), Rat(4)}, UniPoly{Rat(0), Rat(2)}}),
          PrimeContext(2)};
}

Projection quartic_expected() {
  Projection p;
  p.coords = {1, 2, 3};
  p.points = {{{Rat(1), Rat(0), Rat(-1)}, 1},
              {{Rat(2), Rat(1), Rat(0)}, 2},
              {{Rat(3), Rat(2), Rat(1)}, 1}};
  return p;
}

int task_count(const Schedule& s) {
  int c = 0;
  for (const auto& b : s.batches) c += static_cast<int>(b.size());
  return c;
}

}  // namespace

TEST_CASE("strategy names round-trip through parse") {
  for (const Strategy& s : Strategy::all()) CHECK(Strategy::parse(s.name()) == s);
  CHECK(Strategy::parse("regular-tree=5") == Strategy::regular_tree(5));
  CHECK_THROWS_AS(Strategy::parse("fancy"), trop::ParseError);
  CHECK_THROWS_AS(Strategy::parse("regular-tree="), trop::ParseError);
  CHECK_THROWS_AS(Strategy::parse("regular-tree=2x"), trop::ParseError);
  CHECK_THROWS_AS(Strategy::parse("regular-tree=1"), trop::InvalidArity);
  CHECK_THROWS_AS(Strategy::regular_tree(0), trop::InvalidArity);
}

TEST_CASE("initial projections of the quartic instance") {
  Instance inst = quartic_instance();
  auto ps = initial_projections(inst);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].coords == std::vector<int>({1}));
  REQUIRE(ps[0].points.size() == 3);
  CHECK(ps[0].points[0].w == std::vector<Rat>({Rat(1)}));
  CHECK(ps[0].points[1].mult == 2);
  CHECK(ps[2].coords == std::vector<int>({3}));
  CHECK(ps[2].points[0].w == std::vector<Rat>({Rat(-1)}));
}

TEST_CASE("schedule layouts") {
  SUBCASE("one projection has a single task over everything") {
    Schedule s = strategy_schedule(5, Strategy::one_projection());
    CHECK(s.batches.size() == 1);
    CHECK(task_count(s) == 1);
    CHECK(s.slot_coords[static_cast<std::size_t>(s.result_slot)] ==
          std::vector<int>({1, 2, 3, 4, 5}));
  }
  SUBCASE("sequential adds one coordinate per batch") {
    Schedule s = strategy_schedule(5, Strategy::sequential());
    CHECK(s.batches.size() == 4);
    CHECK(task_count(s) == 4);
    for (const auto& b : s.batches) CHECK(b.size() == 1);
    CHECK(s.slot_coords[static_cast<std::size_t>(s.batches[1][0].output)] ==
          std::vector<int>({1, 2, 3}));
  }
  SUBCASE("binary tree halves the level each batch") {
    Schedule s = strategy_schedule(5, Strategy::regular_tree(2));
    CHECK(s.batches.size() == 3);  // 5 -> 3 -> 2 -> 1
    CHECK(task_count(s) == 4);
    CHECK(s.slot_coords[static_cast<std::size_t>(s.result_slot)] ==
          std::vector<int>({1, 2, 3, 4, 5}));
  }
  SUBCASE("wide tree is one projection in one batch") {
    Schedule s = strategy_schedule(5, Strategy::regular_tree(5));
    CHECK(s.batches.size() == 1);
    CHECK(task_count(s) == 1);
  }
  SUBCASE("overlap runs a triangular number of tasks") {
    Schedule s = strategy_schedule(5, Strategy::overlap());
    CHECK(s.batches.size() == 4);
    CHECK(task_count(s) == 10);  // n(n-1)/2
    // batch i has n-i tasks
    CHECK(s.batches[0].size() == 4);
    CHECK(s.batches[3].size() == 1);
    // every glue joins a spine with a side projection sharing all but one label
    for (const auto& batch : s.batches)
      for (const auto& task : batch) CHECK(task.inputs.size() == 2);
  }
  SUBCASE("every strategy covers all coordinates exactly once per task output") {
    for (const Strategy& strat : Strategy::all()) {
      Schedule s = strategy_schedule(6, strat);
      CHECK(s.slot_coords[static_cast<std::size_t>(s.result_slot)] ==
            std::vector<int>({1, 2, 3, 4, 5, 6}));
      for (const auto& batch : s.batches)
        for (const auto& task : batch) {
          std::set<int> seen;
          for (int in : task.inputs)
            for (int c : s.slot_coords[static_cast<std::size_t>(in)]) seen.insert(c);
          std::vector<int> u(seen.begin(), seen.end());
          CHECK(u == s.slot_coords[static_cast<std::size_t>(task.output)]);
        }
    }
  }
}

TEST_CASE("the quartic instance under every strategy") {
  Instance inst = quartic_instance();
  for (const Strategy& s : Strategy::all()) {
    CAPTURE(s.name());
    CHECK(run_serial(inst, s) == quartic_expected());
  }
}

TEST_CASE("single-variable instances skip gluing") {
  Instance inst{ShapeBasis(1, UniPoly{Rat(2), Rat(1)}, {}), PrimeContext(2)};
  Projection p = run_serial(inst, Strategy::overlap());
  CHECK(p.coords == std::vector<int>({1}));
  REQUIRE(p.points.size() == 1);
  CHECK(p.points[0].w == std::vector<Rat>({Rat(1)}));
  CHECK(p.points[0].mult == 1);
}

TEST_CASE("invalid bases are rejected up front") {
  Instance bad{ShapeBasis(2, UniPoly{Rat(0), Rat(1), Rat(1)}, {UniPoly{Rat(1)}}),
               PrimeContext(2)};
  CHECK_THROWS_AS(run_serial(bad, Strategy::overlap()), trop::InvalidInput);
  CHECK_THROWS_AS(initial_projections(bad), trop::InvalidInput);
  CHECK_THROWS_AS(split_oracle(bad), trop::InvalidInput);
}

TEST_CASE("strategies agree on random instances") {
  PrimeContext p2(2), p3(3);
  for (int d : {2, 3, 4}) {
    for (int n : {2, 3, 4}) {
      const PrimeContext& prime = (d + n) % 2 == 0 ? p2 : p3;
      Instance inst = trop::generate_instance(d, n, 1000u * static_cast<unsigned>(d) + static_cast<unsigned>(n), prime).inst;
      Projection ref = run_serial(inst, Strategy::one_projection());
      CHECK(ref.total_multiplicity() == d);
      for (const Strategy& s : Strategy::all()) {
        CAPTURE(d);
        CAPTURE(n);
        CAPTURE(s.name());
        CHECK(run_serial(inst, s) == ref);
      }
    }
  }
}

TEST_CASE("thread count does not change the result") {
  PrimeContext p2(2);
  for (std::uint64_t seed : {7u, 8u}) {
    Instance inst = trop::generate_instance(4, 4, seed, p2).inst;
    for (const Strategy& s : Strategy::all()) {
      Projection serial = run_serial(inst, s);
      CHECK(run(inst, s, 4) == serial);
      CHECK(run(inst, s, 2) == serial);
      CHECK(run(inst, s, 0) == serial);
    }
  }
}

TEST_CASE("split oracle on the quartic instance") {
  // 2x^4+x^3+x^2+x+2 does not split over Q
  CHECK_FALSE(split_oracle(quartic_instance()).has_value());
}

TEST_CASE("split oracle reads valuations off rational roots") {
  // f2 = (x-2)(x-3) = x^2-5x+6, x1 = x+1: points (0,1) and (2,0)
  Instance inst{ShapeBasis(2, UniPoly{Rat(6), Rat(-5), Rat(1)}, {UniPoly{Rat(1), Rat(1)}}),
                PrimeContext(2)};
  auto p = split_oracle(inst);
  REQUIRE(p.has_value());
  CHECK(p->coords == std::vector<int>({1, 2}));
  REQUIRE(p->points.size() == 2);
  CHECK(p->points[0].w == std::vector<Rat>({Rat(0), Rat(1)}));
  CHECK(p->points[1].w == std::vector<Rat>({Rat(2), Rat(0)}));
  CHECK(run_serial(inst, Strategy::overlap()) == *p);
}

TEST_CASE("split oracle merges repeated valuation vectors") {
  // f2 = (x-2)(x-6): both roots and both tail values have valuation 1
  Instance inst{ShapeBasis(2, UniPoly{Rat(12), Rat(-8), Rat(1)}, {UniPoly{Rat(16), Rat(1)}}),
                PrimeContext(2)};
  auto p = split_oracle(inst);
  REQUIRE(p.has_value());
  REQUIRE(p->points.size() == 1);
  CHECK(p->points[0].w == std::vector<Rat>({Rat(1), Rat(1)}));
  CHECK(p->points[0].mult == 2);
  CHECK(run_serial(inst, Strategy::sequential()) == *p);
}

TEST_CASE("split oracle rejects a tail that vanishes at a root") {
  // x1 = x - 2 vanishes at the root 2 of f2 = (x-2)(x-3), so gcd(f2, tail) is nonconstant
  Instance inst{ShapeBasis(2, UniPoly{Rat(6), Rat(-5), Rat(1)}, {UniPoly{Rat(-2), Rat(1)}}),
                PrimeContext(2)};
  CHECK_THROWS_AS(split_oracle(inst), trop::InvalidInput);
}

TEST_CASE("oracle agreement on generated split instances") {
  PrimeContext p2(2);
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 10) {
    // build a splitting f_n from random 2-adic roots, then random tails
    int d = 2 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 2);
    UniPoly fn{Rat(1)};
    for (int i = 0; i < d; ++i) {
      long e = static_cast<long>(rng() % 5) - 2;
      long unit = 1 + 2 * static_cast<long>(rng() % 8);
      trop::Int num(unit), den(1);
      for (long k = 0; k < (e >= 0 ? e : -e); ++k) (e >= 0 ? num : den) *= 2;
      fn = fn * UniPoly{-Rat(num, den), Rat(1)};
    }
    std::vector<UniPoly> tail;
    for (int k = 1; k < n; ++k) {
      std::vector<Rat> c(static_cast<std::size_t>(d));
      for (auto& v : c) v = Rat(static_cast<long>(rng() % 15) - 7);
      tail.emplace_back(std::move(c));
    }
    Instance inst{ShapeBasis(n, fn, tail), p2};
    if (!validate_all(inst.basis).empty()) continue;
    std::optional<Projection> oracle = split_oracle(inst);
    REQUIRE(oracle.has_value());
    for (const Strategy& s : Strategy::all()) {
      CAPTURE(s.name());
      CHECK(run_serial(inst, s) == *oracle);
    }
    ++done;
  }
}

TEST_CASE("coordinate consistency of the full variety") {
  // every point of the full projection restricts to a point of each
  // singleton projection
  PrimeContext p3(3);
  Instance inst = trop::generate_instance(4, 3, 99, p3).inst;
  auto singles = initial_projections(inst);
  Projection full = run_serial(inst, Strategy::overlap());
  CHECK(full.total_multiplicity() == 4);
  for (const auto& pt : full.points) {
    for (std::size_t k = 0; k < singles.size(); ++k) {
      bool found = false;
      for (const auto& sp : singles[k].points)
        if (sp.w[0] == pt.w[k]) found = true;
      CHECK(found);
    }
  }
}
