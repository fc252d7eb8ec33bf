#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tropical::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;    // bad arguments or parse failure
inline constexpr int kSemanticError = 2; // non-member input, preconditions
inline constexpr int kCheckMismatch = 3; // internal cross-check failed

struct ExtremeOptions {
  std::string method = "hypergraph";  // or "residuation"
  bool affine = false;
  bool stats = false;
  int jobs = 1;
};
int cmd_extreme(const std::string& path, const ExtremeOptions& opts,
                std::ostream& out, std::ostream& err);

struct CheckOptions {
  bool oracle = false;
};
int cmd_check(const std::string& path, const std::string& vector_literal,
              const CheckOptions& opts, std::ostream& out, std::ostream& err);

struct MinSccOptions {
  bool oracle = false;
};
int cmd_minscc(const std::string& path, const MinSccOptions& opts,
               std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string label;  // defaults to "rnd<count>"
  int d = 5;
  int n = 5;
  int count = 10;
  std::uint64_t seed = 1;
  double density = 0.5;
  long coeff_lo = -10;
  long coeff_hi = 10;
};
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

struct BoundOptions {
  long n = 0;
  long d = 0;
  bool raw = false;  // print U(n, d) instead of U(n + d, d - 1)
};
int cmd_bound(const BoundOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli
