#ifndef SPI_UNIVARIATE_HPP
#define SPI_UNIVARIATE_HPP

#include <spi/blackbox.hpp>
#include <spi/domain.hpp>
#include <spi/numbers.hpp>
#include <spi/poly.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace spi {

// Open rational interval (lo, hi), lo < hi.
struct Interval {
  Rational lo;
  Rational hi;
};

Interval make_interval(Rational lo, Rational hi);

// Lazily grown table of base^(2^k); lets repeated degree searches against
// the same probe point share their squarings.
class PowerCache {
 public:
  explicit PowerCache(Integer base);

  const Integer& base() const { return base_; }
  const Integer& square(std::size_t k);   // base^(2^k)
  Integer pow(std::uint64_t e);           // base^e

 private:
  Integer base_;
  std::vector<Integer> squares_;
};

// Leading degree of the residue encoded in `value`: the unique d with
//   epsilon * beta^d < 2|value| < epsilon * beta^(d+1).
// Exact integer search (doubling, then binary search); no logarithms.
// Throws NotInDomain for value == 0 and for values below the separation
// threshold (2|value| <= epsilon), which no admissible residue can reach.
std::int64_t udeg(const Rational& value, const UnivariateProbe& probe);

// Leading coefficient over an explicit finite set: the unique c in A with
// |value/beta^d - c| < epsilon/2. Throws NotInDomain if no element fits.
Rational ulcoef_finite(const Rational& value, const UnivariateProbe& probe,
                       std::int64_t d, const FiniteCoefficientSet& A);

// Smallest a >= 1 such that some integer lies strictly inside (a*lo, a*hi),
// i.e. the minimum denominator over rationals in the open interval.
// Requires 0 < lo < hi.
Integer mini_denom(const Interval& iv);

// Leading coefficient over the bounded-rational set: snaps value/beta^d to
// the unique admissible rational within epsilon/2. Throws NotInDomain when
// the minimal denominator exceeds H or the snapped value misses the window.
Rational ulcoef_rat(const Rational& value, const UnivariateProbe& probe,
                    std::int64_t d, const Integer& H);

// Full recovery from a single probe, explicit finite set. Exactly one
// black-box evaluation.
SparsePoly upoly_si(const BlackBox& bb, const FiniteCoefficientSet& A);

// Full recovery from a single probe, bounded-rational set. When a term
// bound is supplied the result is std::nullopt (FAILURE) as soon as a
// peeled coefficient leaves the domain or more than term_bound terms are
// peeled; without a term bound out-of-domain data raises NotInDomain.
std::optional<SparsePoly> upoly_si_rat(const BlackBox& bb, const Integer& C,
                                       const Integer& H,
                                       std::optional<std::int64_t> term_bound = {});

namespace detail {

// Worker shared by the public entry points and the multivariate drivers;
// `powers` must cache powers of probe.beta.
std::optional<SparsePoly> upoly_si_rat_impl(const BlackBox& bb,
                                            const CoefficientDomain& domain,
                                            const UnivariateProbe& probe,
                                            std::optional<std::int64_t> term_bound,
                                            PowerCache& powers);

// Minimal denominator for the open interval (n1/d1, n2/d2) given by
// positive, not necessarily reduced fraction pairs.
Integer mini_denom_pairs(const Integer& n1, const Integer& d1,
                         const Integer& n2, const Integer& d2);

}  // namespace detail

}  // namespace spi

#endif
