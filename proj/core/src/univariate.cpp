#include <spi/univariate.hpp>

#include <spi/errors.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace spi {

Interval make_interval(Rational lo, Rational hi) {
  if (!(lo < hi)) throw InvalidArgument("make_interval: requires lo < hi");
  return Interval{std::move(lo), std::move(hi)};
}

PowerCache::PowerCache(Integer base) : base_(std::move(base)) {
  if (base_ < 2) throw InvalidArgument("PowerCache: base must be >= 2");
  squares_.push_back(base_);
}

const Integer& PowerCache::square(std::size_t k) {
  while (squares_.size() <= k) squares_.push_back(squares_.back() * squares_.back());
  return squares_[k];
}

Integer PowerCache::pow(std::uint64_t e) {
  Integer r(1);
  for (std::size_t k = 0; e != 0; ++k, e >>= 1) {
    if (e & 1) r *= square(k);
  }
  return r;
}

namespace {

// Comparison oracle for the degree search: with value = vn/vd (vd > 0) and
// epsilon = en/ed, decides  epsilon * beta^d < 2|value|  as
//   en * vd * beta^d < 2|vn| * ed.
struct DegreeCompare {
  Integer lhs_scale;  // en * vd
  Integer rhs;        // 2|vn| * ed

  bool below(const Integer& beta_pow) const { return lhs_scale * beta_pow < rhs; }
};

DegreeCompare make_degree_compare(const Rational& value, const Rational& epsilon) {
  DegreeCompare cmp;
  cmp.lhs_scale = epsilon.get_num() * value.get_den();
  cmp.rhs = 2 * abs(value.get_num()) * epsilon.get_den();
  return cmp;
}

// Largest d >= 0 with epsilon * beta^d < 2|value|, plus beta^d.
// Doubling to bracket, then a top-down binary descent that reuses the
// cached squarings of beta.
std::pair<std::int64_t, Integer> udeg_impl(const Rational& value,
                                           const UnivariateProbe& probe,
                                           PowerCache& powers) {
  if (value == 0) throw NotInDomain("udeg: zero value encodes no term");
  DegreeCompare cmp = make_degree_compare(value, probe.epsilon);
  if (!cmp.below(1))
    throw NotInDomain("udeg: value below the separation threshold");
  if (!cmp.below(powers.square(0))) return {0, Integer(1)};

  // find smallest k with !below(beta^(2^k)); then d is in [2^(k-1), 2^k)
  std::size_t k = 1;
  while (cmp.below(powers.square(k))) {
    ++k;
    if (k > 62) throw InternalError("udeg: degree out of range");
  }
  std::int64_t d = std::int64_t(1) << (k - 1);
  Integer pow_d = powers.square(k - 1);
  for (std::size_t j = k - 1; j-- > 0;) {
    Integer cand = pow_d * powers.square(j);
    if (cmp.below(cand)) {
      d += std::int64_t(1) << j;
      pow_d = std::move(cand);
    }
  }
  return {d, std::move(pow_d)};
}

Rational ulcoef_finite_impl(const Rational& value, const UnivariateProbe& probe,
                            const Integer& beta_pow_d, const FiniteCoefficientSet& A) {
  // |value/beta^d - c| < epsilon/2  <=>  2|value - c beta^d| < epsilon beta^d
  const Rational rhs = probe.epsilon * beta_pow_d;
  const Rational* found = nullptr;
  for (const auto& c : A.values) {
    Rational lhs = 2 * abs(value - c * beta_pow_d);
    if (lhs < rhs) {
      if (found)
        throw InternalError("ulcoef_finite: window not separating; bad epsilon");
      found = &c;
    }
  }
  if (!found) throw NotInDomain("ulcoef_finite: no element of A in the window");
  return *found;
}

bool fraction_is_integer(const Integer& num, const Integer& den) {
  return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
}

Integer fraction_floor(const Integer& num, const Integer& den) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

Integer fraction_ceil(const Integer& num, const Integer& den) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

// Smallest d such that d * (n2/d2 - n1/d1) > 1, for the case where exactly
// one endpoint is an integer: floor(1/len) + 1.
Integer one_integer_endpoint_case(const Integer& n1, const Integer& d1,
                                  const Integer& n2, const Integer& d2) {
  // 1/len = d1*d2 / (n2*d1 - n1*d2)
  Integer num = d1 * d2;
  Integer den = n2 * d1 - n1 * d2;
  return fraction_floor(num, den) + 1;
}

std::size_t mini_denom_depth_cap(const Integer& n1, const Integer& d1,
                                 const Integer& n2, const Integer& d2) {
  // ~2 log2(1/(hi-lo)) levels suffice; the cap only guards against bugs.
  Integer inv_len_num = d1 * d2;
  Integer inv_len_den = n2 * d1 - n1 * d2;
  Integer inv_len = fraction_ceil(inv_len_num, inv_len_den);
  return 4 * bit_length(inv_len) + 64;
}

// Iterative form of the interval recursion. Descends through the chain
// (r1, r2) -> (1/f2, 1/f1), f_i the fractional parts, until a base case
// resolves, then unwinds: the minimal denominator for a level is the first
// integer strictly past d'/f2, where d' is the level below's answer.
Integer mini_denom_loop(Integer n1, Integer d1, Integer n2, Integer d2) {
  const std::size_t cap = mini_denom_depth_cap(n1, d1, n2, d2);
  std::vector<std::pair<Integer, Integer>> unwind;  // (f2_num, f2_den) per level

  Integer result;
  for (;;) {
    if (unwind.size() > cap)
      throw InternalError("mini_denom: interval chain exceeded its depth bound");

    const bool int1 = fraction_is_integer(n1, d1);
    const bool int2 = fraction_is_integer(n2, d2);

    if (int1 != int2) {
      result = one_integer_endpoint_case(n1, d1, n2, d2);
      break;
    }
    if (int1 && int2) {
      // r2 - r1 is a positive integer: gap > 1 admits an interior integer
      result = (n2 / d2 - n1 / d1 > 1) ? Integer(1) : Integer(2);
      break;
    }
    // both endpoints fractional: an interior integer means denominator 1
    if (fraction_ceil(n1, d1) * d2 < n2) {
      result = 1;
      break;
    }

    // No integer inside: drop the shared integer part w = floor(r1) and
    // continue with the reciprocals of the fractional parts.
    Integer w = fraction_floor(n1, d1);
    Integer f1_num = n1 - w * d1;  // f1 = f1_num/d1, 0 < f1 < 1
    Integer f2_num = n2 - w * d2;  // f2 = f2_num/d2, f1 < f2 < 1
    unwind.emplace_back(f2_num, d2);

    Integer next_n1 = std::move(d2);
    Integer next_d1 = std::move(f2_num);
    Integer next_n2 = std::move(d1);
    Integer next_d2 = std::move(f1_num);
    n1 = std::move(next_n1);
    d1 = std::move(next_d1);
    n2 = std::move(next_n2);
    d2 = std::move(next_d2);
  }

  for (auto it = unwind.rbegin(); it != unwind.rend(); ++it) {
    // d = first integer > result/f2; one past the quotient if it divides
    Integer num = result * it->second;
    if (fraction_is_integer(num, it->first))
      result = num / it->first + 1;
    else
      result = fraction_ceil(num, it->first);
  }
  return result;
}

}  // namespace

std::int64_t udeg(const Rational& value, const UnivariateProbe& probe) {
  PowerCache powers(probe.beta);
  return udeg_impl(value, probe, powers).first;
}

Rational ulcoef_finite(const Rational& value, const UnivariateProbe& probe,
                       std::int64_t d, const FiniteCoefficientSet& A) {
  if (d < 0) throw InvalidArgument("ulcoef_finite: negative degree");
  PowerCache powers(probe.beta);
  return ulcoef_finite_impl(value, probe, powers.pow(d), A);
}

Integer detail::mini_denom_pairs(const Integer& n1, const Integer& d1,
                                 const Integer& n2, const Integer& d2) {
  return mini_denom_loop(n1, d1, n2, d2);
}

Integer mini_denom(const Interval& iv) {
  if (!(iv.lo > 0 && iv.lo < iv.hi))
    throw InvalidArgument("mini_denom: requires 0 < lo < hi");
  return detail::mini_denom_pairs(iv.lo.get_num(), iv.lo.get_den(),
                                  iv.hi.get_num(), iv.hi.get_den());
}

namespace {

// Shared by ulcoef_rat and the peeling loop. Works on the unreduced pair
// x = xn/xd = value/beta^d to keep big-gcd canonicalizations off the hot
// path. Window endpoints: |x| -/+ epsilon/2.
Rational ulcoef_rat_impl(const Integer& xn, const Integer& xd,
                         const Rational& epsilon, const Integer& H) {
  const Integer& en = epsilon.get_num();
  const Integer& ed = epsilon.get_den();

  Integer abs_xn = abs(xn);
  Integer lo_num = 2 * abs_xn * ed - en * xd;  // (|x| - eps/2) * (2 xd ed)
  Integer hi_num = 2 * abs_xn * ed + en * xd;
  Integer win_den = 2 * xd * ed;
  if (lo_num <= 0)
    throw NotInDomain("ulcoef_rat: window reaches zero; not a leading residue");

  Integer a = detail::mini_denom_pairs(lo_num, win_den, hi_num, win_den);
  if (a > H) throw NotInDomain("ulcoef_rat: minimal denominator exceeds H");

  // b = ceil(a (x - eps/2)); for x < 0 that endpoint is -(|x| + eps/2).
  Integer b = (xn >= 0) ? fraction_ceil(a * lo_num, win_den)
                        : fraction_ceil(-(a * hi_num), win_den);

  Rational c = make_rational(b, a);
  if (c.get_den() > H)
    throw NotInDomain("ulcoef_rat: reduced denominator exceeds H");

  // window soundness: |x - c| < eps/2, i.e. |2 ed (a xn - b xd)| < en a xd
  Integer diff = 2 * ed * abs(a * xn - b * xd);
  if (!(diff < en * a * xd))
    throw NotInDomain("ulcoef_rat: snapped value misses the window");
  return c;
}

}  // namespace

Rational ulcoef_rat(const Rational& value, const UnivariateProbe& probe,
                    std::int64_t d, const Integer& H) {
  if (d < 0) throw InvalidArgument("ulcoef_rat: negative degree");
  if (H < 1) throw InvalidArgument("ulcoef_rat: H must be >= 1");
  PowerCache powers(probe.beta);
  Integer beta_pow = powers.pow(d);
  return ulcoef_rat_impl(value.get_num(), value.get_den() * beta_pow,
                         probe.epsilon, H);
}

SparsePoly upoly_si(const BlackBox& bb, const FiniteCoefficientSet& A) {
  if (bb.arity() != 1) throw InvalidArgument("upoly_si: univariate box required");
  UnivariateProbe probe = make_probe(A);
  PowerCache powers(probe.beta);

  Rational u = bb(Rational(probe.beta));  // the single probe
  std::vector<Term> terms;
  std::int64_t prev_degree = -1;
  while (u != 0) {
    auto [d, beta_pow] = udeg_impl(u, probe, powers);
    if (prev_degree >= 0 && d >= prev_degree)
      throw InternalError("upoly_si: peeled degree did not decrease");
    prev_degree = d;
    Rational c = ulcoef_finite_impl(u, probe, beta_pow, A);
    u -= c * beta_pow;
    terms.push_back(Term{std::move(c), d});
  }
  return SparsePoly::from_terms(std::move(terms));
}

std::optional<SparsePoly> detail::upoly_si_rat_impl(
    const BlackBox& bb, const CoefficientDomain& domain,
    const UnivariateProbe& probe, std::optional<std::int64_t> term_bound,
    PowerCache& powers) {
  if (bb.arity() != 1)
    throw InvalidArgument("upoly_si_rat: univariate box required");

  Rational u = bb(Rational(probe.beta));  // the single probe
  std::vector<Term> terms;
  std::int64_t prev_degree = -1;
  std::int64_t peeled = 0;
  while (u != 0) {
    if (term_bound && peeled >= *term_bound) return std::nullopt;
    std::int64_t d;
    Integer beta_pow;
    Rational c;
    try {
      std::tie(d, beta_pow) = udeg_impl(u, probe, powers);
      c = ulcoef_rat_impl(u.get_num(), u.get_den() * beta_pow, probe.epsilon,
                          domain.H);
    } catch (const NotInDomain&) {
      if (term_bound) return std::nullopt;
      throw;
    }
    if (prev_degree >= 0 && d >= prev_degree)
      throw InternalError("upoly_si_rat: peeled degree did not decrease");
    prev_degree = d;
    if (term_bound && abs(c) > domain.C) return std::nullopt;
    u -= c * beta_pow;
    terms.push_back(Term{std::move(c), d});
    ++peeled;
  }
  return SparsePoly::from_terms(std::move(terms));
}

std::optional<SparsePoly> upoly_si_rat(const BlackBox& bb, const Integer& C,
                                       const Integer& H,
                                       std::optional<std::int64_t> term_bound) {
  CoefficientDomain domain = make_rational_domain(C, H);
  UnivariateProbe probe = make_probe(domain);
  PowerCache powers(probe.beta);
  return detail::upoly_si_rat_impl(bb, domain, probe, term_bound, powers);
}

}  // namespace spi
