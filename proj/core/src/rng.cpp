#include <spi/rng.hpp>

#include <spi/errors.hpp>

namespace spi {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("Rng::below: empty range");
  if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
  // rejection sampling, unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t v = next_u64();
    if (v < limit) return v % n;
  }
}

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("Rng::int_in: empty range");
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Integer Rng::integer_below(const Integer& n) {
  if (n <= 0) throw InvalidArgument("Rng::integer_below: empty range");
  const std::size_t bits = bit_length(n);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~0ull : ((std::uint64_t(1) << top_bits) - 1);
  for (;;) {
    Integer v(0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t chunk = next_u64();
      if (w == 0) chunk &= top_mask;  // keep the rejection rate below 1/2
      v <<= 64;
      Integer part;
      mpz_import(part.get_mpz_t(), 1, -1, sizeof chunk, 0, 0, &chunk);
      v += part;
    }
    if (v < n) return v;
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
  // splitmix64 finalizer over a running combination
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(seed);
  h = mix(h ^ a);
  h = mix(h ^ b);
  h = mix(h ^ c);
  return h;
}

}  // namespace spi
