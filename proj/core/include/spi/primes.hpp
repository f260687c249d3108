#ifndef SPI_PRIMES_HPP
#define SPI_PRIMES_HPP

#include <spi/rng.hpp>

#include <cstdint>
#include <vector>

namespace spi {

bool is_prime(std::int64_t n);

// All primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

// The n smallest primes starting from 2, ascending.
std::vector<std::int64_t> first_primes(std::int64_t n);

}  // namespace spi

#endif
