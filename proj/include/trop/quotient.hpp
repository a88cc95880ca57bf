#pragma once

#include <memory>

#include "trop/matrix.hpp"
#include "trop/unipoly.hpp"

namespace trop {

// The quotient ring Q[x]/(modulus). The modulus need not be monic; it must
// have degree >= 1 and a nonzero constant term (so x is a unit).
class QuotientCtx {
 public:
  explicit QuotientCtx(const UniPoly& modulus);

  int degree() const { return modulus_->degree(); }
  const UniPoly& modulus() const { return *modulus_; }
  bool same_ring(const QuotientCtx& o) const {
    return modulus_ == o.modulus_ || *modulus_ == *o.modulus_;
  }

 private:
  std::shared_ptr<const UniPoly> modulus_;
};

// Residue class in a QuotientCtx; rep() is the unique representative of
// degree < degree of the modulus.
class QElt {
 public:
  QElt(QuotientCtx ctx, const UniPoly& raw);

  const UniPoly& rep() const { return rep_; }
  const QuotientCtx& ctx() const { return ctx_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend QElt operator+(const QElt& a, const QElt& b);
  friend QElt operator-(const QElt& a, const QElt& b);
  friend QElt operator*(const QElt& a, const QElt& b);
  bool operator==(const QElt& o) const;
  bool operator!=(const QElt& o) const { return !(*this == o); }

 private:
  QuotientCtx ctx_;
  UniPoly rep_;
};

QElt q_reduce(const UniPoly& f, const QuotientCtx& ctx);
QElt q_one(const QuotientCtx& ctx);
// The class of x.
QElt q_gen(const QuotientCtx& ctx);

// Throws NonInvertible when gcd(rep, modulus) is nonconstant.
QElt q_inverse(const QElt& a);

// a^k, k >= 0, by repeated squaring.
QElt q_power(const QElt& a, long k);

// Matrix of multiplication by a on the basis 1, x, ..., x^(d-1).
RatMatrix mult_matrix(const QElt& a);

// Characteristic polynomial of mult_matrix(a): monic of degree exactly d,
// vanishing on the images of a at each root of the modulus, with
// multiplicity. Multiplicities survive even when the modulus is not
// squarefree, which the resultant route shares but a splitting-based route
// would not.
UniPoly eliminant(const QElt& a);

// Monic generator of the annihilator of a; divides the eliminant.
UniPoly minimal_polynomial(const QElt& a);

// eliminant(a^(-1)) computed without inverting a: reverse the coefficients
// of eliminant(a) and normalize. Throws NonInvertible when the constant
// term of eliminant(a) vanishes (equivalently, a is a zero divisor).
UniPoly reversal_eliminant(const QElt& a);

}  // namespace trop
