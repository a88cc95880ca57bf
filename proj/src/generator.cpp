#include "trop/generator.hpp"

#include <cassert>
#include <limits>
#include <random>

#include "trop/errors.hpp"

namespace trop {

namespace {

// Bounded draws by rejection, so the stream is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return r % bound;
  }

 private:
  std::mt19937_64 eng_;
};

Rat random_coeff(Rng& rng, const PrimeContext& prime) {
  const long lambda = static_cast<long>(rng.below(100));
  std::uint64_t unit;
  do {
    unit = 1 + rng.below(9999);
  } while (unit % prime.prime() == 0);
  Int c;
  mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(prime.prime()),
                static_cast<unsigned long>(lambda));
  c *= Int(static_cast<unsigned long>(unit));
  return Rat(c);
}

UniPoly random_poly_exact_degree(Rng& rng, const PrimeContext& prime, int deg) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(deg) + 1);
  for (Rat& c : coeffs) c = random_coeff(rng, prime);
  UniPoly f(std::move(coeffs));
  assert(f.degree() == deg);  // coefficients are nonzero by construction
  return f;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t x = splitmix(seed);
  x = splitmix(x ^ splitmix(a));
  x = splitmix(x ^ splitmix(b));
  x = splitmix(x ^ splitmix(c));
  return x;
}

Generated generate_instance(int d, int n, std::uint64_t seed, const PrimeContext& prime) {
  if (d < 1 || n < 1) throw InvalidInput("instance needs d >= 1 and n >= 1");
  for (int attempt = 0;; ++attempt) {
    Rng rng(attempt == 0 ? seed : derive_seed(seed, 0x7265747279ull, static_cast<std::uint64_t>(attempt), 0));
    UniPoly fn = random_poly_exact_degree(rng, prime, d);
    std::vector<UniPoly> tail;
    tail.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k) tail.push_back(random_poly_exact_degree(rng, prime, d - 1));
    ShapeBasis basis(n, std::move(fn), std::move(tail));
    if (validate_all(basis).empty()) {
      return Generated{Instance{std::move(basis), prime}, attempt};
    }
  }
}

}  // namespace trop
