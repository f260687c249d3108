#ifndef SPI_BENCHRUN_HPP
#define SPI_BENCHRUN_HPP

#include <spi/numbers.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spi {

// One timed interpolation run on a freshly generated random instance.
struct BenchRecord {
  std::string param;  // which bound was varied: T, D, C, H or n
  std::int64_t value = 0;
  std::int64_t trial = 0;
  double time_ms = 0.0;
  std::uint64_t blackbox_evals = 0;
  bool success = false;
};

struct BenchConfig {
  std::string vary = "T";  // one of T, D, C, H, n
  std::vector<std::int64_t> values;
  std::int64_t trials = 3;
  std::uint64_t seed = 0;
  // Fixed bounds; the varied one is overridden per value.
  std::int64_t T = 50;
  std::int64_t D = 1000;
  std::int64_t C = 1000000;
  std::int64_t H = 100;
  std::int64_t n = 1;
  // Untimed runs per value before the recorded trials.
  std::int64_t warmup = 1;
};

// Runs the grid in deterministic (value, trial) order. Univariate bounds
// (n == 1) time the single-probe rational recovery; n >= 2 times the
// probabilistic multivariate driver, whose failures are recorded as
// success=false rows. Instance and algorithm seeds derive from
// (seed, value, trial) only.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

// Header "param,value,trial,time_ms,blackbox_evals,success", LF endings.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace spi

#endif
