#pragma once

#include <vector>

#include "trop/rational.hpp"
#include "trop/unipoly.hpp"

namespace trop {

struct NewtonVertex {
  int i;   // exponent
  Rat h;   // valuation of the coefficient
  bool operator==(const NewtonVertex& o) const { return i == o.i && h == o.h; }
};

// Lower convex hull of {(i, v_p(a_i)) : a_i != 0}, vertices in ascending i,
// edge slopes strictly increasing.
struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;
};

struct TropPoint1 {
  Rat w;
  int mult = 0;
  bool operator==(const TropPoint1& o) const { return w == o.w && mult == o.mult; }
};

// Tropicalization of a univariate polynomial: negated edge slopes of the
// Newton polygon with the edge widths as multiplicities. Points ascending
// in w, pairwise distinct, multiplicities summing to deg f when f(0) != 0.
struct TropUniv {
  std::vector<TropPoint1> points;
  int total_multiplicity() const;
  bool operator==(const TropUniv& o) const { return points == o.points; }
};

// Throws ZeroInput for f = 0.
NewtonPolygon newton_polygon(const UniPoly& f, const PrimeContext& ctx);

// Throws ZeroInput for f = 0 and ZeroConstantTerm when f(0) = 0.
TropUniv trop_univariate(const UniPoly& f, const PrimeContext& ctx);

}  // namespace trop
