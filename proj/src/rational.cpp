#include "trop/rational.hpp"

#include <cctype>
#include <ostream>

namespace trop {

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw InvalidInput("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r;
  r.q_ = -q_;
  return r;
}

Rat Rat::parse(const std::string& s) {
  // shape: -?digits(/digits)?
  std::size_t i = 0;
  const std::size_t len = s.size();
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < len && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (i < len && s[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError("bad rational literal: '" + s + "'");
  i = num_end;
  if (i != len) {
    if (s[i] != '/') throw ParseError("bad rational literal: '" + s + "'");
    std::size_t den_end = digits(i + 1);
    if (den_end == i + 1 || den_end != len)
      throw ParseError("bad rational literal: '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  Rat r;
  r.q_ = q;
  return r;
}

std::string Rat::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.q_; }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin base set for the full 64-bit range.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeContext::PrimeContext(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
  pz_ = Int(static_cast<unsigned long>(p));
}

long PrimeContext::int_valuation(const Int& x) const {
  if (sgn(x) == 0) throw ZeroHasNoValuation();
  Int rest;
  mp_bitcnt_t v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz_.get_mpz_t());
  return static_cast<long>(v);
}

Rat valuation(const Rat& c, const PrimeContext& ctx) {
  if (c.is_zero()) throw ZeroHasNoValuation();
  long vn = ctx.int_valuation(c.numerator());
  long vd = ctx.int_valuation(c.denominator());
  return Rat(vn - vd);
}

}  // namespace trop
