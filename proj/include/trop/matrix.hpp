#pragma once

#include <vector>

#include "trop/rational.hpp"
#include "trop/unipoly.hpp"

namespace trop {

// Dense square matrix over Rat, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rat(0)) {}

  static RatMatrix identity(int n);

  int size() const { return n_; }
  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator*=(const Rat& c);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { a += b; return a; }
  friend RatMatrix operator*(RatMatrix a, const Rat& c) { a *= c; return a; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<Rat> a_;
};

/// det(z*I - M), monic of degree size(M). Exact: the matrix is scaled to
// integers by the common denominator and the characteristic polynomial is
// computed division-free, so no rational normalization happens per step.
UniPoly char_poly(const RatMatrix& m);

}  // namespace trop
