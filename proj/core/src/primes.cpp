#include <spi/primes.hpp>

#include <spi/errors.hpp>

#include <algorithm>
#include <mutex>

namespace spi {

namespace {

// Growing sieve shared across callers; guarded for concurrent read/extend.
struct PrimeCache {
  std::mutex mutex;
  std::vector<std::int64_t> primes = {2, 3, 5, 7, 11, 13};
  std::int64_t sieved_to = 13;

  void extend_to(std::int64_t limit) {
    while (sieved_to < limit) {
      std::int64_t lo = sieved_to + 1;
      std::int64_t hi = std::max(limit, sieved_to * 2);
      segment(lo, hi);
      sieved_to = hi;
    }
  }

  void extend_count(std::int64_t count) {
    while (static_cast<std::int64_t>(primes.size()) < count)
      extend_to(sieved_to * 2);
  }

 private:
  void segment(std::int64_t lo, std::int64_t hi) {
    std::vector<bool> composite(hi - lo + 1, false);
    for (std::int64_t p : primes) {
      if (p * p > hi) break;
      std::int64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::int64_t m = start; m <= hi; m += p) composite[m - lo] = true;
    }
    for (std::int64_t v = lo; v <= hi; ++v)
      if (!composite[v - lo]) primes.push_back(v);
  }
};

PrimeCache& cache() {
  static PrimeCache c;
  return c;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto& c = cache();
  std::scoped_lock lock(c.mutex);
  if (n <= c.sieved_to)
    return std::binary_search(c.primes.begin(), c.primes.end(), n);
  for (std::int64_t p : c.primes) {
    if (p * p > n) return true;
    if (n % p == 0) return false;
  }
  // trial divide past the sieved range
  std::int64_t d = c.sieved_to + 1;
  for (; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return {};
  auto& c = cache();
  std::scoped_lock lock(c.mutex);
  c.extend_to(std::max<std::int64_t>(hi, 2));
  auto first = std::lower_bound(c.primes.begin(), c.primes.end(), lo);
  auto last = std::upper_bound(first, c.primes.end(), hi);
  return {first, last};
}

std::vector<std::int64_t> first_primes(std::int64_t n) {
  if (n < 0) throw InvalidArgument("first_primes: negative count");
  auto& c = cache();
  std::scoped_lock lock(c.mutex);
  c.extend_count(n);
  return {c.primes.begin(), c.primes.begin() + n};
}

}  // namespace spi
