#ifndef SPI_DOMAIN_HPP
#define SPI_DOMAIN_HPP

#include <spi/numbers.hpp>

#include <vector>

namespace spi {

// The bounded-rational coefficient set
//   A = { b/a : 0 < a <= H, |b/a| <= C }
// together with its separation constants:
//   epsilon1 = min gap between distinct elements,
//   epsilon2 = min |a| over nonzero elements,
//   epsilon  = min(epsilon1, epsilon2).
struct CoefficientDomain {
  Integer C;  // magnitude bound, >= 1
  Integer H;  // denominator bound, >= 1
  Rational epsilon;
  Rational epsilon1;
  Rational epsilon2;
};

// epsilon = 1/(H(H-1)) for H >= 2; the integer case H = 1 has unit gaps
// and unit minimal magnitude, so epsilon = 1.
CoefficientDomain make_rational_domain(const Integer& C, const Integer& H);

// Smallest admissible probe point, 2C/epsilon + 1.
Integer beta_min(const CoefficientDomain& domain);

// Exact membership: |c| <= C and denominator(c) <= H in reduced form.
bool in_domain(const Rational& c, const CoefficientDomain& domain);

// An explicit finite coefficient set with its derived constants. Values are
// sorted and deduplicated; at least one value must be nonzero.
struct FiniteCoefficientSet {
  std::vector<Rational> values;
  Rational max_abs;  // C for this set
  Rational epsilon;
  Rational epsilon1;
  Rational epsilon2;
};

FiniteCoefficientSet make_finite_set(std::vector<Rational> values);

// A probe point beta >= 2C/epsilon + 1 plus the constants needed to decode
// values read at it.
struct UnivariateProbe {
  Integer beta;
  Rational epsilon;
  Integer C;
};

UnivariateProbe make_probe(const CoefficientDomain& domain);
UnivariateProbe make_probe(const FiniteCoefficientSet& set);

}  // namespace spi

#endif
