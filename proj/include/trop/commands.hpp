#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "trop/driver.hpp"

namespace trop {

// Exit codes shared by every subcommand: 0 success, 1 invalid input,
// 2 internal verification failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailure = 2;

int cmd_trop(const std::string& input_path, const Strategy& strategy, bool multiplicities,
             int threads, const std::string& output_path, std::ostream& out, std::ostream& err);

int cmd_project(const std::string& input_path, const std::vector<int>& coords, int threads,
                const std::string& output_path, std::ostream& out, std::ostream& err);

// Prints one line per violation, or "ok". Exit 1 when violations exist.
int cmd_check(const std::string& input_path, std::ostream& out, std::ostream& err);

int cmd_generate(int d, int n, std::uint64_t seed, std::uint64_t prime,
                 const std::string& output_path, std::ostream& out, std::ostream& err);

struct BenchConfig {
  std::vector<int> degrees;
  std::vector<int> nvars;
  std::vector<Strategy> strategies;
  int reps = 1;
  std::uint64_t seed = 0;
  std::uint64_t prime = 2;
  int threads = 1;
  std::string output;  // empty or "-": stdout
};

// Hook for tests; defaults to run().
using BenchRunner = std::function<Projection(const Instance&, const Strategy&, int)>;

// CSV with the header d,n,strategy,seed,wall-time-ms,points,agree; one row
// per (degree, nvars, rep, strategy). agree flags rows whose point multiset
// differs from the first strategy's on the same instance; any disagreement
// makes the exit code 2.
int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err,
              const BenchRunner& runner = {});

}  // namespace trop
