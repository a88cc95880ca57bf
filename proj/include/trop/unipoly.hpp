#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// Dense univariate polynomial over Rat. coeff(i) is the coefficient of x^i.
// The zero polynomial is the empty coefficient vector and has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  UniPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  static UniPoly monomial(int k, const Rat& c = Rat(1));
  static UniPoly x() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Zero outside the stored range.
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& leading() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c) { a *= c; return a; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { a *= c; return a; }

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  Rat evaluate(const Rat& at) const;
  UniPoly derivative() const;
  UniPoly monic() const;  // requires a nonzero polynomial
  // Multiplies by x^k (k >= 0).
  UniPoly shifted_up(int k) const;

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& f);

 private:
  std::vector<Rat> coeffs_;
  void normalize();
};

// f = q*g + r with deg r < deg g. Throws DivisionByZeroPoly for g = 0.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g);

// Quotient of an exact division; throws VerificationError if g does not
// divide f.
UniPoly div_exact(const UniPoly& f, const UniPoly& g);

// f^e for e >= 0.
UniPoly upow(const UniPoly& f, long e);

// Monic gcd. gcd(f, 0) = monic f; gcd(0, 0) throws BothZero.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

// g = s*f + t*h with g the monic gcd.
struct Xgcd {
  UniPoly g, s, t;
};
Xgcd xgcd(const UniPoly& f, const UniPoly& h);

// f / gcd(f, f'), monic. Throws ZeroInput for f = 0.
UniPoly squarefree_part(const UniPoly& f);

// All rational roots with multiplicities, found by enumerating divisor
// pairs of the cleared trailing and leading coefficients and verifying by
// exact division. Throws ZeroInput for f = 0.
std::map<Rat, int> rational_roots(const UniPoly& f);

}  // namespace trop
