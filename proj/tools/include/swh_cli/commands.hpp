#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swh_cli/report.hpp"

namespace swh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

// Exact rationals are used up to this selection length under --method auto.
inline constexpr int kAutoRationalMaxL = 400;

struct ExactArgs {
  int n = 0;
  int k = 0;
  double beta = 0.63;
  bool rational = false;
  std::string method = "auto";  // auto | rational | float
};

struct BruteArgs {
  int n = 0;
  int k = 0;
  double beta = 0.63;
};

struct AsymptoticArgs {
  int k = 0;
  double beta = 0.63;
  double tol = 1e-6;
};

struct SimulateArgs {
  int n = 0;
  int k = 0;
  double beta = 0.63;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool wilson = false;
};

struct JHistArgs {
  int n = 0;
  int k = 0;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct TailArgs {
  int n = 0;
  int k = 0;
  std::vector<int> t;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct TableArgs {
  std::vector<int> k;
  std::vector<double> beta;
  double tol = 1e-6;
};

struct OptimizeArgs {
  int k = 0;
  double tol = 1e-6;
};

// Each command validates its arguments (throwing swh::PreconditionError),
// runs the computation, and returns a report whose doubles are rounded to
// `precision` significant digits. Timing is left for the caller to fill.
RunReport cmd_exact(const ExactArgs& args, int precision);
RunReport cmd_brute(const BruteArgs& args, int precision);
RunReport cmd_asymptotic(const AsymptoticArgs& args, int precision);
RunReport cmd_simulate(const SimulateArgs& args, int precision);
RunReport cmd_jhist(const JHistArgs& args, int precision);
RunReport cmd_tail(const TailArgs& args, int precision);
RunReport cmd_table(const TableArgs& args, int precision);
RunReport cmd_optimize(const OptimizeArgs& args, int precision);

/// Worker count from SWH_WORKERS, or 1 when unset or invalid.
unsigned default_workers();

}  // namespace swh::cli
