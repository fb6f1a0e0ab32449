#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "wrank/rank_formulas.hpp"
#include "wrank/specht.hpp"

namespace wrank::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kIoError = 3,
  kSizeCap = 4,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count from WRANK_THREADS, else the hardware concurrency.
unsigned worker_threads();

nlohmann::json to_json(const BigInt& x);
nlohmann::json to_json(const IncidenceSpec& spec);
nlohmann::json to_json(const LayerDims& layers);
nlohmann::json to_json(const RankReport& report);
nlohmann::json to_json(const DiagonalComparison& cmp);

struct SweepRow {
  int m = 0;
  int n = 0;
  std::uint32_t characteristic = 0;
  std::uint64_t predicted = 0;
  std::uint64_t computed = 0;
  double elapsed_ms = 0;
  bool match = false;
};

struct SweepConfig {
  int max_m = 4;
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11};
  bool include_char0 = false;
  std::uint64_t seed = kDefaultSeed;
};

/// One row per (m, n, characteristic), 4 <= m <= max_m, 2 <= n <= m/2, in
/// parameter order regardless of which worker finished first.
std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads);

inline constexpr const char* kSweepHeader = "m,n,char,predicted,computed,elapsed_ms,verdict";
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace wrank::cli
