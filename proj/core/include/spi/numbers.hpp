#ifndef SPI_NUMBERS_HPP
#define SPI_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>

namespace spi {

// All recovery paths run on exact arbitrary-precision scalars.
using Integer = mpz_class;
using Rational = mpq_class;

// a^e for e >= 0.
Integer pow_ui(const Integer& base, std::uint64_t e);
Rational pow_ui(const Rational& base, std::uint64_t e);

// Floor/ceiling of a rational as an exact integer.
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Canonical rational from a (possibly unreduced) numerator/denominator pair.
// Throws InvalidArgument on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Bits in |z|; bit_length(0) == 0.
std::size_t bit_length(const Integer& z);

}  // namespace spi

#endif
