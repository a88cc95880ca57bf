#include "trop/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

namespace trop {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& c) {
  for (Rat& x : a_) x *= c;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  assert(a.n_ == b.n_);
  const int n = a.n_;
  RatMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

UniPoly char_poly(const RatMatrix& m0) {
  const int n = m0.size();
  if (n == 0) return UniPoly::constant(Rat(1));

  // Scale to an integer matrix N = den * M; then det(zI - M) = det(yI - N) / den^n
  // evaluated at y = den * z, which only rescales each coefficient by a power
  // of den. All heavy arithmetic below is division-free integer work.
  Int den(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int d = m0.at(i, j).denominator();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
  std::vector<Int> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& e = m0.at(i, j);
      a[static_cast<std::size_t>(i) * n + j] = e.numerator() * (den / e.denominator());
    }
  auto at = [&](int i, int j) -> const Int& { return a[static_cast<std::size_t>(i) * n + j]; };

  // Berkowitz iteration over the leading principal submatrices. c holds the
  // coefficients of det(yI - A_r), highest degree first, c[0] = 1.
  std::vector<Int> c{Int(1), -at(0, 0)};
  for (int r = 2; r <= n; ++r) {
    // first column of the Toeplitz factor: 1, -a_rr, -R S, -R A S, ...
    // with A the leading (r-1) block, R the row below it, S the column right of it
    std::vector<Int> t(static_cast<std::size_t>(r) + 1);
    t[0] = 1;
    t[1] = -at(r - 1, r - 1);
    std::vector<Int> v(static_cast<std::size_t>(r) - 1);
    for (int i = 0; i < r - 1; ++i) v[static_cast<std::size_t>(i)] = at(i, r - 1);
    for (int k = 2; k <= r; ++k) {
      Int dot(0);
      for (int i = 0; i < r - 1; ++i)
        mpz_addmul(dot.get_mpz_t(), at(r - 1, i).get_mpz_t(),
                   v[static_cast<std::size_t>(i)].get_mpz_t());
      t[static_cast<std::size_t>(k)] = -dot;
      if (k == r) break;
      std::vector<Int> w(static_cast<std::size_t>(r) - 1, Int(0));
      for (int i = 0; i < r - 1; ++i)
        for (int j = 0; j < r - 1; ++j)
          mpz_addmul(w[static_cast<std::size_t>(i)].get_mpz_t(), at(i, j).get_mpz_t(),
                     v[static_cast<std::size_t>(j)].get_mpz_t());
      v = std::move(w);
    }
    std::vector<Int> nc(static_cast<std::size_t>(r) + 1, Int(0));
    for (int i = 0; i <= r; ++i)
      for (int k = std::max(0, i - r); k < std::min(i + 1, r); ++k)
        mpz_addmul(nc[static_cast<std::size_t>(i)].get_mpz_t(),
                   t[static_cast<std::size_t>(i - k)].get_mpz_t(),
                   c[static_cast<std::size_t>(k)].get_mpz_t());
    c = std::move(nc);
  }

  std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1);
  Int dpow(1);  // den^(n-j) while walking down from z^n
  for (int j = n; j >= 0; --j) {
    coeffs[static_cast<std::size_t>(j)] = Rat(c[static_cast<std::size_t>(n - j)], dpow);
    if (j > 0) dpow *= den;
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace trop
