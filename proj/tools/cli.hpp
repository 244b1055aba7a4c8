#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace unref::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // table: a count disagrees with the published value
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

enum class OutputFormat { Stars, Parts };

/// One verdict line per sequence line; `#` lines are skipped.
int run_verify(std::istream& in, std::ostream& out, std::ostream& err);

int run_enumerate(std::int64_t n, OutputFormat format, std::optional<std::int64_t> mex,
                  std::ostream& out, std::ostream& err);

/// `N<TAB>count` rows for N in [from, to].
int run_count(std::int64_t from, std::int64_t to, unsigned jobs, std::ostream& out,
              std::ostream& err);

/// Recomputes the published sample points; the last column is `ok` or
/// `MISMATCH`.
int run_table(bool extended, unsigned jobs, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<std::int64_t> lengths;
  int samples = 16;
  std::uint64_t seed = 1;
};

/// Mean wall time of the fast and naive verifiers on sampled unrefinable
/// sequences, one row per (length, verifier).
int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace unref::cli
