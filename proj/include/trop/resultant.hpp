#pragma once

#include <vector>

#include "trop/unipoly.hpp"

namespace trop {

// Polynomial in x whose coefficients are polynomials in z, dense in x.
// Used only to eliminate x out of pairs of such polynomials.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { normalize(); }

  // f(x) viewed with constant-in-z coefficients.
  static BiPoly lift(const UniPoly& f);
  // z - g(x), as a polynomial in x.
  static BiPoly z_minus(const UniPoly& g);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const UniPoly& coeff(int i) const;
  const UniPoly& leading() const;

  friend BiPoly operator-(BiPoly a, const BiPoly& b);
  // Coefficient-wise product with a scalar from the coefficient ring.
  BiPoly scaled(const UniPoly& s) const;
  // s * x^k * (*this)
  BiPoly scaled_shifted(const UniPoly& s, int k) const;
  // Coefficient-wise exact division; throws VerificationError if inexact.
  BiPoly divided_exact(const UniPoly& s) const;

 private:
  std::vector<UniPoly> c_;
  void normalize();
};

// lc(g)^(deg f - deg g + 1) * f mod g; requires deg f >= deg g >= 0.
BiPoly pseudo_rem(const BiPoly& f, const BiPoly& g);

// Res_x(f, g), exact, computed along the subresultant pseudo-remainder
// sequence so intermediate coefficients stay determinant-sized.
// Throws ZeroInput if either argument is zero.
UniPoly resultant_x(const BiPoly& f, const BiPoly& g);

// Res_x(f(x), z - g(x)): monic multiples of it vanish exactly on the images
// g(theta) over the roots theta of f, with multiplicity.
UniPoly image_resultant(const UniPoly& f, const UniPoly& g);

}  // namespace trop
