#include <spi/domain.hpp>

#include <spi/errors.hpp>

#include <algorithm>
#include <utility>

namespace spi {

CoefficientDomain make_rational_domain(const Integer& C, const Integer& H) {
  if (C < 1) throw InvalidArgument("make_rational_domain: C must be >= 1");
  if (H < 1) throw InvalidArgument("make_rational_domain: H must be >= 1");
  CoefficientDomain d;
  d.C = C;
  d.H = H;
  if (H >= 2) {
    d.epsilon1 = make_rational(1, H * (H - 1));
    d.epsilon2 = make_rational(1, H);
  } else {
    // integer coefficients: unit gaps, unit minimal magnitude
    d.epsilon1 = 1;
    d.epsilon2 = 1;
  }
  d.epsilon = std::min(d.epsilon1, d.epsilon2);
  return d;
}

Integer beta_min(const CoefficientDomain& domain) {
  // 2C/epsilon + 1; integral for both epsilon shapes above
  Rational b = 2 * Rational(domain.C) / domain.epsilon + 1;
  return ceil_q(b);
}

bool in_domain(const Rational& c, const CoefficientDomain& domain) {
  if (c.get_den() > domain.H) return false;
  return abs(c) <= domain.C;
}

FiniteCoefficientSet make_finite_set(std::vector<Rational> values) {
  if (values.empty()) throw InvalidArgument("make_finite_set: empty set");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  FiniteCoefficientSet set;
  set.max_abs = 0;
  bool have_nonzero = false;
  for (const auto& v : values) {
    Rational a = abs(v);
    if (a > set.max_abs) set.max_abs = a;
    if (v != 0 && (!have_nonzero || a < set.epsilon2)) {
      set.epsilon2 = a;
      have_nonzero = true;
    }
  }
  if (!have_nonzero)
    throw InvalidArgument("make_finite_set: needs at least one nonzero value");

  bool have_gap = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    Rational gap = values[i] - values[i - 1];
    if (!have_gap || gap < set.epsilon1) {
      set.epsilon1 = gap;
      have_gap = true;
    }
  }
  if (!have_gap) set.epsilon1 = set.epsilon2;  // singleton set

  set.epsilon = std::min(set.epsilon1, set.epsilon2);
  set.values = std::move(values);
  return set;
}

UnivariateProbe make_probe(const CoefficientDomain& domain) {
  return UnivariateProbe{beta_min(domain), domain.epsilon, domain.C};
}

UnivariateProbe make_probe(const FiniteCoefficientSet& set) {
  Integer C = ceil_q(set.max_abs);
  Integer beta = ceil_q(2 * Rational(C) / set.epsilon) + 1;
  return UnivariateProbe{beta, set.epsilon, C};
}

}  // namespace spi
