#include "trop/newton.hpp"

#include <algorithm>
#include <cassert>

namespace trop {

int TropUniv::total_multiplicity() const {
  int s = 0;
  for (const TropPoint1& p : points) s += p.mult;
  return s;
}

NewtonPolygon newton_polygon(const UniPoly& f, const PrimeContext& ctx) {
  if (f.is_zero()) throw ZeroInput("Newton polygon of the zero polynomial");
  std::vector<NewtonVertex> pts;
  for (int i = 0; i <= f.degree(); ++i) {
    const Rat& c = f.coeff(i);
    if (c.is_zero()) continue;
    pts.push_back({i, valuation(c, ctx)});
  }
  // monotone chain for the lower hull; middle points on an edge are dropped
  // so consecutive slopes are strictly increasing
  std::vector<NewtonVertex> hull;
  for (const NewtonVertex& p : pts) {
    while (hull.size() >= 2) {
      const NewtonVertex& a = hull[hull.size() - 2];
      const NewtonVertex& b = hull[hull.size() - 1];
      // slope(b,p) <= slope(a,b), cross-multiplied (i strictly increases)
      if ((p.h - b.h) * Rat(b.i - a.i) <= (b.h - a.h) * Rat(p.i - b.i))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return {std::move(hull)};
}

TropUniv trop_univariate(const UniPoly& f, const PrimeContext& ctx) {
  if (f.is_zero()) throw ZeroInput("tropicalization of the zero polynomial");
  if (f.coeff(0).is_zero()) throw ZeroConstantTerm();
  NewtonPolygon np = newton_polygon(f, ctx);
  TropUniv out;
  for (std::size_t k = 1; k < np.vertices.size(); ++k) {
    const NewtonVertex& a = np.vertices[k - 1];
    const NewtonVertex& b = np.vertices[k];
    Rat w = -(b.h - a.h) / Rat(b.i - a.i);
    out.points.push_back({w, b.i - a.i});
  }
  std::reverse(out.points.begin(), out.points.end());  // slopes increase, so w decreases
  assert(out.total_multiplicity() == f.degree());
  return out;
}

}  // namespace trop
