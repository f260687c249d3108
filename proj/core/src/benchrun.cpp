#include <spi/benchrun.hpp>

#include <spi/errors.hpp>
#include <spi/instances.hpp>
#include <spi/kronecker.hpp>
#include <spi/multivariate.hpp>
#include <spi/poly.hpp>
#include <spi/rng.hpp>
#include <spi/univariate.hpp>

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ostream>

namespace spi {

namespace {

struct Bounds {
  std::int64_t T, D, C, H, n;
};

Bounds apply(const BenchConfig& cfg, std::int64_t value) {
  Bounds b{cfg.T, cfg.D, cfg.C, cfg.H, cfg.n};
  if (cfg.vary == "T")
    b.T = value;
  else if (cfg.vary == "D")
    b.D = value;
  else if (cfg.vary == "C")
    b.C = value;
  else if (cfg.vary == "H")
    b.H = value;
  else if (cfg.vary == "n")
    b.n = value;
  else
    throw InvalidArgument("bench: vary must be one of T, D, C, H, n");
  if (b.T < 1 || b.D < 1 || b.C < 1 || b.H < 1 || b.n < 1)
    throw InvalidArgument("bench: all bounds must be >= 1");
  return b;
}

// One interpolation on a fresh random instance; degree-D term forced so the
// instance actually exercises the stated degree bound.
BenchRecord run_one(const BenchConfig& cfg, std::int64_t value,
                    std::int64_t trial) {
  const Bounds b = apply(cfg, value);
  Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(cfg.vary[0]),
                   static_cast<std::uint64_t>(value),
                   static_cast<std::uint64_t>(trial)));

  BenchRecord rec;
  rec.param = cfg.vary;
  rec.value = value;
  rec.trial = trial;

  using clock = std::chrono::steady_clock;
  if (b.n == 1) {
    SparsePoly poly = random_sparse_poly(rng, b.C, b.H, b.D, b.T, true);
    BlackBox bb = wrap_blackbox(poly);
    auto t0 = clock::now();
    auto recovered = upoly_si_rat(bb, b.C, b.H, b.T);
    auto t1 = clock::now();
    rec.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.blackbox_evals = bb.probe_count();
    rec.success = recovered.has_value() && *recovered == poly;
  } else {
    const std::int64_t D = std::max<std::int64_t>(b.D, 2);
    MultiPoly poly = random_multi_poly(rng, static_cast<int>(b.n), b.C, b.H, D, b.T);
    BlackBox bb = wrap_blackbox(poly);
    auto qs = default_diversification_primes(static_cast<int>(b.n));
    const std::uint64_t algo_seed = rng.fork_seed();
    auto t0 = clock::now();
    auto recovered = pro_mpoly_si_mk(bb, static_cast<int>(b.n), D, b.T, b.C,
                                     b.H, qs, algo_seed);
    auto t1 = clock::now();
    rec.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.blackbox_evals = bb.probe_count();
    rec.success = recovered.has_value() && *recovered == poly;
  }
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.values.empty()) throw InvalidArgument("bench: no values");
  if (cfg.trials < 1) throw InvalidArgument("bench: trials must be >= 1");

  std::vector<BenchRecord> records;
  records.reserve(cfg.values.size() * cfg.trials);
  for (std::int64_t value : cfg.values) {
    for (std::int64_t w = 0; w < cfg.warmup; ++w)
      run_one(cfg, value, -1 - w);  // untimed in spirit: results dropped
    for (std::int64_t trial = 0; trial < cfg.trials; ++trial)
      records.push_back(run_one(cfg, value, trial));
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "param,value,trial,time_ms,blackbox_evals,success\n";
  char buf[64];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
    out << r.param << ',' << r.value << ',' << r.trial << ',' << buf << ','
        << r.blackbox_evals << ',' << (r.success ? 1 : 0) << "\n";
  }
}

}  // namespace spi
