#include <spi/oracle.hpp>

#include <spi/errors.hpp>
#include <spi/kronecker.hpp>

#include <algorithm>
#include <vector>

namespace spi::oracle {

std::optional<Integer> mini_denom_bruteforce(const Interval& iv, const Integer& cap) {
  if (!(iv.lo > 0 && iv.lo < iv.hi))
    throw InvalidArgument("mini_denom_bruteforce: requires 0 < lo < hi");
  for (Integer a = 1; a <= cap; ++a) {
    // greatest integer strictly below a*hi; inside iff it clears a*lo
    Integer k = ceil_q(a * iv.hi) - 1;
    if (k > a * iv.lo) return a;
  }
  return std::nullopt;
}

std::vector<Rational> enumerate_domain(const CoefficientDomain& domain) {
  std::vector<Rational> values;
  // each element appears exactly once at its reduced denominator
  for (Integer a = 1; a <= domain.H; ++a) {
    Integer b_max = domain.C * a;
    for (Integer b = -b_max; b <= b_max; ++b) {
      Rational v = make_rational(b, a);
      if (v.get_den() == a) values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

bool uniqueness_check_at(const CoefficientDomain& domain,
                         std::int64_t degree_bound, const Integer& beta) {
  if (degree_bound < 0)
    throw InvalidArgument("uniqueness_check: negative degree bound");
  std::vector<Rational> A = enumerate_domain(domain);
  const std::size_t k = A.size();
  const std::size_t positions = static_cast<std::size_t>(degree_bound) + 1;

  std::vector<Integer> beta_pow(positions);
  beta_pow[0] = 1;
  for (std::size_t i = 1; i < positions; ++i) beta_pow[i] = beta_pow[i - 1] * beta;

  // odometer over all |A|^(degree_bound+1) coefficient tuples
  std::vector<std::size_t> digits(positions, 0);
  std::vector<Rational> values;
  for (;;) {
    Rational v(0);
    for (std::size_t i = 0; i < positions; ++i) v += A[digits[i]] * beta_pow[i];
    values.push_back(std::move(v));

    std::size_t pos = 0;
    while (pos < positions && ++digits[pos] == k) {
      digits[pos] = 0;
      ++pos;
    }
    if (pos == positions) break;
  }
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

bool uniqueness_check(const CoefficientDomain& domain, std::int64_t degree_bound) {
  return uniqueness_check_at(domain, degree_bound, beta_min(domain));
}

Rational good_prime_density(const MultiPoly& f, std::int64_t D,
                            const std::vector<std::int64_t>& primes) {
  if (primes.empty()) throw InvalidArgument("good_prime_density: no primes");
  std::vector<std::vector<std::int64_t>> vectors;
  vectors.reserve(f.term_count());
  for (const auto& t : f.terms()) vectors.push_back(t.exponents);
  Integer good = 0;
  for (std::int64_t p : primes)
    if (is_good_prime(vectors, D, p)) ++good;
  return make_rational(good, Integer(primes.size()));
}

}  // namespace spi::oracle
