#include "trop/resultant.hpp"

#include <cassert>
#include <utility>

namespace trop {

namespace {
const UniPoly kZeroPoly;
const UniPoly kOne = UniPoly::constant(Rat(1));
}

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::lift(const UniPoly& f) {
  std::vector<UniPoly> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = UniPoly::constant(f.coeffs()[i]);
  return BiPoly(std::move(c));
}

BiPoly BiPoly::z_minus(const UniPoly& g) {
  std::vector<UniPoly> c(std::max<std::size_t>(g.coeffs().size(), 1));
  c[0] = UniPoly{-g.coeff(0), Rat(1)};
  for (std::size_t i = 1; i < g.coeffs().size(); ++i) c[i] = UniPoly::constant(-g.coeffs()[i]);
  return BiPoly(std::move(c));
}

const UniPoly& BiPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroPoly;
  return c_[i];
}

const UniPoly& BiPoly::leading() const {
  assert(!c_.empty());
  return c_.back();
}

BiPoly operator-(BiPoly a, const BiPoly& b) {
  if (b.c_.size() > a.c_.size()) a.c_.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] -= b.c_[i];
  a.normalize();
  return a;
}

BiPoly BiPoly::scaled(const UniPoly& s) const {
  if (s.is_zero()) return BiPoly();
  std::vector<UniPoly> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return BiPoly(std::move(c));
}

BiPoly BiPoly::scaled_shifted(const UniPoly& s, int k) const {
  assert(k >= 0);
  if (s.is_zero() || is_zero()) return BiPoly();
  std::vector<UniPoly> c(c_.size() + static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i] * s;
  return BiPoly(std::move(c));
}

BiPoly BiPoly::divided_exact(const UniPoly& s) const {
  std::vector<UniPoly> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = div_exact(c_[i], s);
  return BiPoly(std::move(c));
}

BiPoly pseudo_rem(const BiPoly& f, const BiPoly& g) {
  assert(!g.is_zero() && f.degree() >= g.degree());
  const UniPoly& d = g.leading();
  int e = f.degree() - g.degree() + 1;
  BiPoly r = f;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    UniPoly c = r.leading();
    int k = r.degree() - g.degree();
    r = r.scaled(d) - g.scaled_shifted(c, k);
    --e;
  }
  for (; e > 0; --e) r = r.scaled(d);
  return r;
}

// Walks the subresultant pseudo-remainder sequence and carries the exact
// relation between res(r_{i-1}, r_i) and res(r_i, r_{i+1}) along, as a sign
// and a quotient of accumulated coefficient-ring factors. The accumulated
// quotient divides out exactly once the chain bottoms out.
UniPoly resultant_x(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroInput("resultant of the zero polynomial");
  BiPoly a = f, b = g;
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    std::swap(a, b);
  }
  UniPoly num = kOne;
  UniPoly den = kOne;
  if (b.degree() == 0) {
    UniPoly res = upow(b.coeff(0), a.degree());
    return negate ? -res : res;
  }

  long delta = a.degree() - b.degree();
  UniPoly beta = (delta % 2 == 0) ? UniPoly::constant(Rat(-1)) : kOne;  // (-1)^(delta+1)
  UniPoly psi = UniPoly::constant(Rat(-1));
  while (true) {
    const int m = a.degree();
    const int n = b.degree();
    BiPoly rem = pseudo_rem(a, b);
    if (rem.is_zero()) return UniPoly();  // common factor of positive degree
    BiPoly c = rem.divided_exact(beta);
    const int r = c.degree();

    // res(a, b) = (-1)^(m n) lc(b)^(m - r - (m-n+1) n) beta^n res(b, c)
    if ((m & 1) && (n & 1)) negate = !negate;
    const UniPoly lcb = b.leading();
    long e = static_cast<long>(m) - r - static_cast<long>(m - n + 1) * n;
    if (e >= 0)
      num = num * upow(lcb, e);
    else
      den = den * upow(lcb, -e);
    num = num * upow(beta, n);

    if (delta > 0) psi = div_exact(upow(-lcb, delta), upow(psi, delta - 1));
    delta = n - r;
    beta = -(lcb * upow(psi, delta));

    a = std::move(b);
    b = std::move(c);
    if (r == 0) {
      num = num * upow(b.coeff(0), a.degree());
      break;
    }
  }
  UniPoly res = div_exact(num, den);
  return negate ? -res : res;
}

UniPoly image_resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero()) throw ZeroInput("resultant of the zero polynomial");
  return resultant_x(BiPoly::lift(f), BiPoly::z_minus(g));
}

}  // namespace trop
