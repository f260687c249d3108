#ifndef SPI_INSTANCES_HPP
#define SPI_INSTANCES_HPP

#include <spi/numbers.hpp>
#include <spi/poly.hpp>
#include <spi/rng.hpp>

#include <cstdint>

namespace spi {

// Random instance generation shared by the bench harness and the test
// suites. Coefficients are uniform over the reduced fractions with
// denominator <= H and magnitude <= C; exponent vectors are uniform over
// the total-degree-<=-D simplex, without repetition.

// Uniform over A(C, H) \ {0}.
Rational random_coefficient(Rng& rng, const Integer& C, const Integer& H);

// term_count distinct degrees from [0, D]. With force_top_degree a term of
// degree exactly D is included (term_count >= 1).
SparsePoly random_sparse_poly(Rng& rng, const Integer& C, const Integer& H,
                              std::int64_t D, std::int64_t term_count,
                              bool force_top_degree = false);

// term_count distinct exponent vectors with total degree <= D; the count is
// clamped to the simplex size.
MultiPoly random_multi_poly(Rng& rng, int nvars, const Integer& C,
                            const Integer& H, std::int64_t D,
                            std::int64_t term_count);

}  // namespace spi

#endif
