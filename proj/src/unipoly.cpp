#include "trop/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <set>
#include <sstream>

namespace trop {

namespace {
const Rat kZero(0);
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(int k, const Rat& c) {
  assert(k >= 0);
  if (c.is_zero()) return UniPoly();
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  UniPoly f;
  f.coeffs_ = std::move(v);
  return f;
}

const Rat& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

const Rat& UniPoly::leading() const {
  assert(!coeffs_.empty());
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (Rat& a : coeffs_) a *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

Rat UniPoly::evaluate(const Rat& at) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  assert(!is_zero());
  UniPoly r = *this;
  Rat inv = Rat(1) / leading();
  for (Rat& c : r.coeffs_) c *= inv;
  return r;
}

UniPoly UniPoly::shifted_up(int k) const {
  assert(k >= 0);
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> out(coeffs_.size() + k, Rat(0));
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
  UniPoly f;
  f.coeffs_ = std::move(out);
  return f;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Rat& c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != Rat(1)) os << c << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw DivisionByZeroPoly();
  if (f.degree() < g.degree()) return {UniPoly(), f};
  std::vector<Rat> rem(f.coeffs());
  const int dg = g.degree();
  const int dq = f.degree() - dg;
  std::vector<Rat> quot(dq + 1, Rat(0));
  Rat lg_inv = Rat(1) / g.leading();
  for (int k = dq; k >= 0; --k) {
    Rat c = rem[k + dg] * lg_inv;
    if (c.is_zero()) continue;
    quot[k] = c;
    for (int i = 0; i <= dg; ++i) rem[k + i] -= c * g.coeff(i);
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly div_exact(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw VerificationError("exact polynomial division left a remainder");
  return q;
}

UniPoly upow(const UniPoly& f, long e) {
  assert(e >= 0);
  UniPoly acc = UniPoly::constant(Rat(1));
  UniPoly base = f;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw BothZero();
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = divrem(a, b).second;
    a = std::move(b);
    // monic remainders keep the coefficients small
    b = r.is_zero() ? UniPoly() : r.monic();
  }
  return a.monic();
}

Xgcd xgcd(const UniPoly& f, const UniPoly& h) {
  if (f.is_zero() && h.is_zero()) throw BothZero();
  UniPoly r0 = f, r1 = h;
  UniPoly s0 = UniPoly::constant(Rat(1)), s1;
  UniPoly t0, t1 = UniPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  Rat inv = Rat(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw ZeroInput("squarefree part of the zero polynomial");
  if (f.degree() == 0) return UniPoly::constant(Rat(1));
  UniPoly g = gcd(f, f.derivative());
  return div_exact(f, g).monic();
}

namespace {

// Pollard-Brent on positive integers, with BPSW-style primality from GMP.
// Sizes here come from coefficient divisors, so this is never stressed hard.
Int pollard_brent(const Int& n, unsigned long c0) {
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  gmp_randstate_t st;
  gmp_randinit_mt(st);
  gmp_randseed_ui(st, 0x5eed + c0);
  while (true) {
    Int y, cc;
    mpz_urandomm(y.get_mpz_t(), st, n.get_mpz_t());
    mpz_urandomm(cc.get_mpz_t(), st, n.get_mpz_t());
    if (sgn(cc) == 0) cc = 1;
    Int x, d(1), q(1), ys, t;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + cc) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + cc) % n;
          t = x - y;
          q = (q * abs(t)) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (ys * ys + cc) % n;
        t = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) {
      gmp_randclear(st);
      return d;
    }
  }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n, static_cast<unsigned long>(mpz_fdiv_ui(n.get_mpz_t(), 1000003)));
  factor_into(d, out);
  factor_into(n / d, out);
}

std::map<Int, int> factorize(Int n) {
  assert(sgn(n) > 0);
  std::map<Int, int> out;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Int(p)];
      n /= static_cast<long>(p);
    }
  }
  unsigned long q = 53;
  while (n > 1 && Int(q) * Int(q) <= n && q < 100000) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      ++out[Int(q)];
      n /= static_cast<long>(q);
    }
    q += 2;
  }
  if (n > 1) factor_into(n, out);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::map<Int, int> fac = factorize(abs(n));
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : fac) {
    std::size_t base = out.size();
    Int pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// t^d * f(s/t) evaluated over the integers; zero iff s/t is a root.
bool integer_root_test(const std::vector<Int>& c, const Int& s, const Int& t) {
  Int v = c.back();
  Int tp(1);
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    tp *= t;
    v = v * s + c[static_cast<std::size_t>(i)] * tp;
  }
  return sgn(v) == 0;
}

}  // namespace

std::map<Rat, int> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw ZeroInput("rational_roots of the zero polynomial");
  std::map<Rat, int> out;
  UniPoly g = f;
  int at_origin = 0;
  while (g.degree() > 0 && g.coeff(0).is_zero()) {
    std::vector<Rat> c(g.coeffs().begin() + 1, g.coeffs().end());
    g = UniPoly(std::move(c));
    ++at_origin;
  }
  if (at_origin > 0) out[Rat(0)] = at_origin;
  if (g.degree() <= 0) return out;

  Int den_lcm(1);
  for (const Rat& c : g.coeffs()) {
    Int d = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Int> ic(g.coeffs().size());
  for (std::size_t i = 0; i < ic.size(); ++i) {
    Rat scaled = g.coeffs()[i] * Rat(den_lcm);
    assert(scaled.is_integer());
    ic[i] = scaled.numerator();
  }

  std::vector<Int> num_divs = divisors(ic.front());
  std::vector<Int> den_divs = divisors(ic.back());
  std::set<Rat> cands;
  for (const Int& s : num_divs) {
    for (const Int& t : den_divs) {
      cands.insert(Rat(s, t));
      cands.insert(Rat(-s, t));
    }
  }
  for (const Rat& r : cands) {
    if (!integer_root_test(ic, r.numerator(), r.denominator())) continue;
    UniPoly lin{-r, Rat(1)};
    UniPoly h = div_exact(g, lin);
    int mult = 1;
    while (true) {
      auto [q, rest] = divrem(h, lin);
      if (!rest.is_zero()) break;
      h = std::move(q);
      ++mult;
    }
    out[r] = mult;
  }
  return out;
}

}  // namespace trop
