#ifndef SPI_ORACLE_HPP
#define SPI_ORACLE_HPP

#include <spi/domain.hpp>
#include <spi/numbers.hpp>
#include <spi/poly.hpp>
#include <spi/univariate.hpp>

#include <cstdint>
#include <optional>
#include <vector>

// Brute-force references for grounding the fast paths. Exponential-time;
// linked by the test binaries only, never by the CLI.
namespace spi::oracle {

// Smallest a <= cap with an integer strictly inside (a*lo, a*hi);
// nullopt if none exists up to the cap. Linear scan.
std::optional<Integer> mini_denom_bruteforce(const Interval& iv, const Integer& cap);

// All elements of the bounded-rational set A(C, H), sorted ascending.
std::vector<Rational> enumerate_domain(const CoefficientDomain& domain);

// True iff evaluation at beta is injective over all polynomials with
// coefficients in A(C, H) (zero allowed) and degree <= degree_bound.
// Exhaustive: |A|^(degree_bound+1) values.
bool uniqueness_check_at(const CoefficientDomain& domain,
                         std::int64_t degree_bound, const Integer& beta);

// Same at the default probe point beta_min(domain).
bool uniqueness_check(const CoefficientDomain& domain, std::int64_t degree_bound);

// Fraction of the given primes that map f's monomials without collision.
Rational good_prime_density(const MultiPoly& f, std::int64_t D,
                            const std::vector<std::int64_t>& primes);

}  // namespace spi::oracle

#endif
