#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "trop/errors.hpp"

namespace trop {

using Int = mpz_class;

// Arbitrary-precision rational number, always kept in canonical form:
// gcd(|numerator|, denominator) = 1 and denominator >= 1. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(static_cast<signed long>(n)) {}
  Rat(const Int& n) : q_(n) {}
  Rat(const Int& num, const Int& den);

  // Accepts "a" or "a/b" with decimal a, b. Throws ParseError on anything
  // else (in particular a zero denominator).
  static Rat parse(const std::string& s);
  // Serializes as "a" for integers and "a/b" otherwise, b > 0, gcd(|a|,b)=1.
  // parse(str()) round-trips bit-exactly.
  std::string str() const;

  Int numerator() const { return q_.get_num(); }
  Int denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);
  Rat operator-() const;

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);

// Deterministic primality test, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Fixes the prime p of the p-adic valuation. Construction rejects
// non-primes, so downstream code can assume p is prime.
class PrimeContext {
 public:
  explicit PrimeContext(std::uint64_t p);
  std::uint64_t prime() const { return p_; }
  const Int& prime_int() const { return pz_; }
  // v_p of a nonzero integer (number of times p divides it).
  long int_valuation(const Int& x) const;

 private:
  std::uint64_t p_ = 2;
  Int pz_ = 2;
};

// v_p(c) = v_p(num) - v_p(den) as an integer-valued Rat.
// Throws ZeroHasNoValuation for c = 0.
Rat valuation(const Rat& c, const PrimeContext& ctx);

}  // namespace trop
