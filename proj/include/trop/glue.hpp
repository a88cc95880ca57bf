#pragma once

#include <vector>

#include "trop/newton.hpp"
#include "trop/shapegb.hpp"

namespace trop {

struct ProjPoint {
  std::vector<Rat> w;
  int mult = 0;
  bool operator==(const ProjPoint& o) const { return w == o.w && mult == o.mult; }
};

// Projection of the tropical variety onto a coordinate subset: the labels
// (sorted ascending) and the image points with multiplicities, sorted
// lexicographically, pairwise distinct coordinate vectors.
struct Projection {
  std::vector<int> coords;
  std::vector<ProjPoint> points;

  void sort_canonical();
  int total_multiplicity() const;
  bool operator==(const Projection& o) const {
    return coords == o.coords && points == o.points;
  }
};

// Fiber product of projections over their shared coordinates: every vector
// on the union coordinate set whose restrictions all appear in the inputs.
// A superset of the true projection onto the union.
struct CandidateSet {
  std::vector<int> coords;
  std::vector<std::vector<Rat>> elems;  // sorted lexicographically, distinct
};

CandidateSet candidate_set(const std::vector<Projection>& ps);

// Smallest exponent vector (by l1 norm, ties lexicographic on the entries
// at T.coords) supported on T.coords with u[ell-1] = -1 that separates T
// under w -> -<u, w>. Termination is guaranteed: generic vectors separate.
SlimVector find_injective_u_enum(const CandidateSet& t, int ell, int n);

// Least m >= 0 such that (a, b) -> a - m*b is injective on X x Y, found by
// excluding every nonnegative integral difference quotient between distinct
// points of the grid. At most |X|^2 |Y|^2 / 2 quotients, and the result is
// bounded by that count.
long find_injective_m_slopes(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

struct GlueOptions {
  // Transform reused from an earlier glue; when the inputs are a base
  // carrying seed->ell plus one extra singleton coordinate, the search for
  // a separating vector reduces to a slope exclusion on top of the seed.
  const SlimVector* seed = nullptr;
};

struct GlueResult {
  Projection proj;
  SlimVector u;  // the separating transform that was used
};

// Combines projections into the projection onto the union of their
// coordinate sets: build the candidate set, pick a separating transform,
// tropicalize the transformed tail's eliminant, and keep the candidates
// the eliminant points pull back to. Throws GlueMismatch when a point
// matches no candidate or the multiplicities cannot be reconciled.
GlueResult glue(const ShapeBasis& b, const PrimeContext& prime,
                const std::vector<Projection>& ps, const GlueOptions& opt = {});

}  // namespace trop
