#pragma once

#include <cstdint>

#include "trop/driver.hpp"

namespace trop {

// Deterministic pseudo-random instances: every coefficient is p^lambda * u
// with lambda uniform on {0..99} and u a p-coprime unit uniform on
// {1..9999}; f_n has degree exactly d, tail polynomials degree exactly d-1.
// Rejected candidates (validation failures) retry with a seed derived from
// (seed, attempt), so results depend only on (d, n, seed, p).
struct Generated {
  Instance inst;
  int retries = 0;
};

Generated generate_instance(int d, int n, std::uint64_t seed, const PrimeContext& prime);

// Stable mixing of run parameters into per-cell seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c);

}  // namespace trop
