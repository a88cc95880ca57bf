#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trop/quotient.hpp"
#include "trop/unipoly.hpp"

namespace trop {

// Lexicographic Groebner basis in shape position for a zero-dimensional
// ideal: f_n univariate in the last variable, plus a tail of relations
// x_k - f_k(x_n) for k = 1..n-1. Coordinates are labeled 1..n; tail(k) is
// the polynomial expressing coordinate k.
//
// Construction only fixes the arity; use validate/validate_all before
// feeding a basis to anything that computes.
class ShapeBasis {
 public:
  ShapeBasis(int n, UniPoly fn, std::vector<UniPoly> tail);

  int vars() const { return n_; }
  int degree() const { return fn_.degree(); }
  const UniPoly& fn() const { return fn_; }
  const UniPoly& tail(int k) const;
  const std::vector<UniPoly>& tail_polys() const { return tail_; }

  // Quotient ring mod f_n, built on first use; requires a valid basis.
  const QuotientCtx& ring() const;
  // Cached inverse of the class of tail(k); computed once, reused across
  // concurrent calls and across copies of this basis.
  const QElt& tail_inverse(int k) const;

  bool operator==(const ShapeBasis& o) const {
    return n_ == o.n_ && fn_ == o.fn_ && tail_ == o.tail_;
  }

 private:
  int n_;
  UniPoly fn_;
  std::vector<UniPoly> tail_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

enum class DiagKind {
  BadShape,          // wrong arity or degenerate f_n
  DegreeViolation,   // some tail polynomial has degree >= deg f_n
  NotSaturated,      // a solution would leave the torus
};

struct Diagnostic {
  DiagKind kind;
  int index;  // offending tail label, or 0 when about f_n
  std::string message;
};

// All violations, in a fixed scan order; empty means the basis is valid.
std::vector<Diagnostic> validate_all(const ShapeBasis& b);
// First violation, if any.
std::optional<Diagnostic> validate(const ShapeBasis& b);

// Exponent vector of a monomial substitution that keeps the ideal's
// tropical variety computable through a single new eliminant: u has length
// vars(), u[ell-1] = -1, all other entries >= 0, and u[n-1] is the exponent
// of the last variable.
struct SlimVector {
  std::vector<long> u;
  int ell = 0;  // coordinate label carrying the -1

  static SlimVector minus_e(int ell, int n);
  long l1() const;
  bool operator==(const SlimVector& o) const { return u == o.u && ell == o.ell; }
};

// Basis of the transformed ideal: coordinate ell is replaced by the product
// x^(u_n) * prod_{i != ell, n} f_i^(u_i) * x_ell, so only tail(ell) changes.
// Requires a valid basis; the result passes validate.
ShapeBasis slim_transform(const ShapeBasis& b, const SlimVector& u);

// The multiplier h = x^(u_n) * prod_{i != ell, n} f_i^(u_i) in the quotient
// ring. Exposed so the defining identity h * tail'(ell) = tail(ell) can be
// checked independently.
QElt transform_multiplier(const ShapeBasis& b, const SlimVector& u);

// Monic eliminant of the transformed tail(ell) without computing the
// transform itself: multiply h by the cached inverse of tail(ell), take the
// eliminant of the product (which is tail'(ell)^(-1)), then reverse its
// coefficients. Throws NonInvertible when some factor is a zero divisor.
UniPoly transform_eliminant(const ShapeBasis& b, const SlimVector& u);

}  // namespace trop
