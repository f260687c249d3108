#ifndef SPI_MULTIVARIATE_HPP
#define SPI_MULTIVARIATE_HPP

#include <spi/blackbox.hpp>
#include <spi/kronecker.hpp>
#include <spi/numbers.hpp>
#include <spi/poly.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace spi {

// One interpolated image f_{x,p}: FAILURE is an empty optional.
struct CandidateImage {
  std::int64_t prime = 0;
  std::optional<SparsePoly> poly;
};

// Everything needed to decode the diversified probe: the degrees and
// coefficients c_i/H_i of the accepted univariate image, the
// diversification primes, and the probe point
//   beta = 2 C q_n^D max(H_i) + 1,
// large enough that each numerator b = c_i q1^e1 ... qn^en rounds out
// exactly.
struct RecoveryContext {
  std::vector<std::int64_t> degrees;  // d_1 < ... < d_t
  std::vector<Integer> numerators;    // c_i
  std::vector<Integer> denominators;  // H_i > 0
  std::vector<Integer> qs;
  std::int64_t degree_bound = 1;  // D
  Integer beta;
};

RecoveryContext make_recovery_context(const SparsePoly& image,
                                      std::span<const Integer> qs,
                                      std::int64_t D, const Integer& C);

// Peels the diversified value g(beta) from the top degree down, factoring
// each b/c_i over the diversification primes into an exponent vector.
// Returns FAILURE (nullopt) if some b is not divisible by c_i, a cofactor
// other than 1 remains, a total degree exceeds D, or a nonzero residue is
// left at the end.
std::optional<std::vector<MultiTerm>> recover_terms(const Rational& g_value,
                                                    const RecoveryContext& ctx);

// Counters behind the rounding-window check |u H_i / beta^d_i - b| < 1/2
// asserted at every peel; a violation throws InternalError.
struct WindowStats {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

WindowStats recovery_window_stats();
void reset_recovery_window_stats();

struct MpolyStats {
  std::int64_t candidate_count = 0;       // N
  std::int64_t failed_candidates = 0;     // images that came back FAILURE
  std::int64_t discarded_candidates = 0;  // verified-and-rejected images
  std::int64_t verification_probes = 0;
  std::int64_t chosen_prime = 0;
};

// Deterministic driver: interpolates the substituted box at N candidate
// primes, picks the candidate with the most terms (ties: smallest prime),
// verifies it against fresh probes at 1..D(p-1)+1, then decodes exponent
// vectors from one diversified probe. Exact under the declared bounds.
MultiPoly mpoly_si_mk(const BlackBox& mbb, int nvars, std::int64_t D,
                      std::int64_t T, const Integer& C, const Integer& H,
                      std::span<const Integer> qs, MpolyStats* stats = nullptr);

// Integer fast path: images are interpolated over the enlarged integer set
// |a| <= TC, where every candidate succeeds, so the most-terms candidate is
// collision-free without any verification probes.
MultiPoly mpoly_si_mk_int(const BlackBox& mbb, int nvars, std::int64_t D,
                          std::int64_t T, const Integer& C,
                          std::span<const Integer> qs,
                          MpolyStats* stats = nullptr);

struct ProStats {
  std::int64_t prime = 0;
  Rational lambda;
};

// Probabilistic driver: one random prime from [lambda, 2 lambda], one
// univariate recovery, one diversified probe. Succeeds with probability at
// least 1/2 per call; FAILURE is a value. Requires D >= 2.
std::optional<MultiPoly> pro_mpoly_si_mk(const BlackBox& mbb, int nvars,
                                         std::int64_t D, std::int64_t T,
                                         const Integer& C, const Integer& H,
                                         std::span<const Integer> qs,
                                         std::uint64_t seed,
                                         ProStats* stats = nullptr);

}  // namespace spi

#endif
