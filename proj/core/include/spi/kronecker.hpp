#ifndef SPI_KRONECKER_HPP
#define SPI_KRONECKER_HPP

#include <spi/blackbox.hpp>
#include <spi/numbers.hpp>
#include <spi/poly.hpp>
#include <spi/rng.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace spi {

// The reduced substitution x_i -> x^(e_i) with e_i = (D+1)^(i-1) mod p.
// Keeps substituted degrees at most D(p-1).
struct KroneckerMap {
  int nvars = 1;
  std::int64_t degree_bound = 1;        // D
  std::int64_t prime = 3;               // p
  std::vector<std::int64_t> exponents;  // e_1 = 1, each e_i < p
};

// [ (D+1)^(i-1) mod p : i = 1..n ], computed by a modular chain; the full
// power (D+1)^(n-1) is never formed.
std::vector<std::int64_t> kron_exponents(std::int64_t D, std::int64_t p, int n);

KroneckerMap make_kronecker_map(int nvars, std::int64_t D, std::int64_t p);

// Univariate view of an n-variate box: beta -> mbb(beta^e1, ..., beta^en).
BlackBox substituted_blackbox(const BlackBox& mbb, const KroneckerMap& map);

// The same substitution with each variable tagged by its own prime:
// x_i -> q_i x^(e_i), so recovered coefficients carry their monomial's
// exponents as a prime factorization.
struct DiversifiedMap {
  KroneckerMap base;
  std::vector<Integer> qs;  // distinct primes q_1 < ... < q_n
};

std::vector<Integer> default_diversification_primes(int nvars);

DiversifiedMap make_diversified_map(KroneckerMap base, std::vector<Integer> qs);

BlackBox diversified_blackbox(const BlackBox& mbb, const DiversifiedMap& map);

// Substituted degree of one monomial under the map.
std::int64_t mapped_degree(std::span<const std::int64_t> exponents,
                           const KroneckerMap& map);

// True iff the map sends the given distinct monomials to pairwise distinct
// univariate degrees (no collision).
bool is_good_prime(const std::vector<std::vector<std::int64_t>>& exponent_vectors,
                   std::int64_t D, std::int64_t p);

// Symbolic images under the substitutions; collisions merge. Test and
// verification helpers.
SparsePoly kron_image(const MultiPoly& f, const KroneckerMap& map);
SparsePoly diversified_image(const MultiPoly& f, const DiversifiedMap& map);

// How many distinct odd primes guarantee at least one collision-free one
// for any polynomial with at most T terms and degree at most D in n
// variables:
//   floor(T(T-1)/2 * log2((D+1)^n - 1) - T^2/4 + T/2) + 1,
// clamped to at least 1. The floor is exact: the comparison is done on
// ((D+1)^n - 1)^(2T(T-1)) against a power of two via bit length.
std::int64_t good_prime_count_bound(int n, std::int64_t D, std::int64_t T);

// The N smallest odd primes, ascending.
std::vector<std::int64_t> first_odd_primes(std::int64_t N);

// Threshold max(21, (5/3) n T(T-1) ln D) as an exact rational upper bound
// (ln D is bracketed rationally). A prime drawn uniformly from
// [lambda, 2 lambda] avoids collisions with probability at least 1/2.
// Requires D >= 2.
Rational lambda_bound(int n, std::int64_t T, std::int64_t D);

// Uniformly random prime in [ceil(lo), floor(hi)].
std::int64_t random_prime_in(const Rational& lo, const Rational& hi, Rng& rng);

// Candidate primes for the deterministic driver plus the probabilistic
// threshold.
struct PrimePlan {
  std::int64_t candidate_count = 0;  // N
  std::vector<std::int64_t> primes;  // N distinct odd primes
  Rational lambda;
};

PrimePlan make_prime_plan(int n, std::int64_t D, std::int64_t T);

}  // namespace spi

#endif
