#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trop/glue.hpp"

namespace trop {

// How the n singleton projections get combined into the full variety.
struct Strategy {
  enum class Kind { OneProjection, Sequential, RegularTree, Overlap };
  Kind kind = Kind::Overlap;
  int arity = 2;  // RegularTree fan-in

  static Strategy one_projection() { return {Kind::OneProjection, 2}; }
  static Strategy sequential() { return {Kind::Sequential, 2}; }
  static Strategy regular_tree(int k);
  static Strategy overlap() { return {Kind::Overlap, 2}; }
  // "one-projection" | "sequential" | "regular-tree=K" | "overlap"
  static Strategy parse(const std::string& s);
  static std::vector<Strategy> all();  // one of each kind, regular-tree=2

  std::string name() const;
  bool operator==(const Strategy& o) const {
    return kind == o.kind && (kind != Kind::RegularTree || arity == o.arity);
  }
};

struct Instance {
  ShapeBasis basis;
  PrimeContext prime;
};

// p_k for k = 1..n-1 from the eliminant of tail(k), plus p_n from f_n
// itself. Requires a valid basis.
std::vector<Projection> initial_projections(const Instance& inst);

// One glue step: which slots feed it and which slot it fills.
struct GlueTask {
  std::vector<int> inputs;
  int output = 0;
};

// Batches execute in order; tasks inside a batch are independent. Slots
// 0..n-1 hold the singleton projections, the last slot the full variety.
struct Schedule {
  std::vector<std::vector<int>> slot_coords;
  std::vector<std::vector<GlueTask>> batches;
  int result_slot = 0;
};

// Throws InvalidArity for regular-tree fan-in below 2. Requires n >= 2.
Schedule strategy_schedule(int n, const Strategy& s);

// Serial reference runner.
Projection run_serial(const Instance& inst, const Strategy& s);

// Batch-parallel runner; batches are barriers, tasks within a batch run
// concurrently. Identical output for every thread count; threads <= 1 is
// exactly run_serial.
Projection run(const Instance& inst, const Strategy& s, int threads = 1);

// Independent oracle for instances whose f_n splits into rational linear
// factors: read the valuation vectors straight off the roots. Returns
// nullopt when f_n does not split over Q; throws ZeroCoordinate when a
// tail polynomial vanishes at a root.
std::optional<Projection> split_oracle(const Instance& inst);

}  // namespace trop
