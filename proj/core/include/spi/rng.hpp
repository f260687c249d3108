#ifndef SPI_RNG_HPP
#define SPI_RNG_HPP

#include <spi/numbers.hpp>

#include <cstdint>
#include <random>

namespace spi {

// Seeded deterministic randomness. Bounded draws are hand-rolled rejection
// sampling so streams do not depend on the standard library's
// implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);

  // Uniform in [0, n), n >= 1, arbitrary precision.
  Integer integer_below(const Integer& n);

  // Seed for a derived independent stream.
  std::uint64_t fork_seed() { return next_u64() ^ 0x9e3779b97f4a7c15ull; }

 private:
  std::mt19937_64 gen_;
};

// Stateless seed mixing for addressable substreams (bench rows, trials).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                       std::uint64_t c = 0);

}  // namespace spi

#endif
