#include <spi/kronecker.hpp>

#include <spi/errors.hpp>
#include <spi/primes.hpp>

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace spi {

std::vector<std::int64_t> kron_exponents(std::int64_t D, std::int64_t p, int n) {
  if (D < 1) throw InvalidArgument("kron_exponents: D must be >= 1");
  if (n < 1) throw InvalidArgument("kron_exponents: n must be >= 1");
  if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(p))
    throw InvalidArgument("kron_exponents: p must be a prime below 2^31");

  // modular chain; (D+1)^(i-1) itself is never formed
  const std::int64_t base = ((D % p) + 1) % p;
  std::vector<std::int64_t> exps(n);
  exps[0] = 1;
  for (int i = 1; i < n; ++i) exps[i] = exps[i - 1] * base % p;
  return exps;
}

KroneckerMap make_kronecker_map(int nvars, std::int64_t D, std::int64_t p) {
  if (D > std::numeric_limits<std::int64_t>::max() / (p > 1 ? p : 2))
    throw InvalidArgument("make_kronecker_map: D*(p-1) overflows");
  KroneckerMap map;
  map.nvars = nvars;
  map.degree_bound = D;
  map.prime = p;
  map.exponents = kron_exponents(D, p, nvars);
  return map;
}

BlackBox substituted_blackbox(const BlackBox& mbb, const KroneckerMap& map) {
  if (mbb.arity() != map.nvars)
    throw InvalidArgument("substituted_blackbox: arity mismatch");
  return BlackBox(1, [mbb, map](std::span<const Rational> point) {
    std::vector<Rational> sub(map.nvars);
    for (int i = 0; i < map.nvars; ++i)
      sub[i] = pow_ui(point[0], static_cast<std::uint64_t>(map.exponents[i]));
    return mbb(std::span<const Rational>(sub));
  });
}

std::vector<Integer> default_diversification_primes(int nvars) {
  auto ps = first_primes(nvars);
  return {ps.begin(), ps.end()};
}

DiversifiedMap make_diversified_map(KroneckerMap base, std::vector<Integer> qs) {
  if (static_cast<int>(qs.size()) != base.nvars)
    throw InvalidArgument("make_diversified_map: need one prime per variable");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] < 2 || !qs[i].fits_slong_p() || !is_prime(qs[i].get_si()))
      throw InvalidArgument("make_diversified_map: q_i must be prime");
    if (i > 0 && !(qs[i - 1] < qs[i]))
      throw InvalidArgument("make_diversified_map: primes must be ascending");
  }
  return DiversifiedMap{std::move(base), std::move(qs)};
}

BlackBox diversified_blackbox(const BlackBox& mbb, const DiversifiedMap& map) {
  if (mbb.arity() != map.base.nvars)
    throw InvalidArgument("diversified_blackbox: arity mismatch");
  return BlackBox(1, [mbb, map](std::span<const Rational> point) {
    std::vector<Rational> sub(map.base.nvars);
    for (int i = 0; i < map.base.nvars; ++i) {
      sub[i] = map.qs[i] *
               pow_ui(point[0], static_cast<std::uint64_t>(map.base.exponents[i]));
    }
    return mbb(std::span<const Rational>(sub));
  });
}

std::int64_t mapped_degree(std::span<const std::int64_t> exponents,
                           const KroneckerMap& map) {
  if (static_cast<int>(exponents.size()) != map.nvars)
    throw InvalidArgument("mapped_degree: arity mismatch");
  __int128 d = 0;
  for (int i = 0; i < map.nvars; ++i)
    d += static_cast<__int128>(exponents[i]) * map.exponents[i];
  if (d > std::numeric_limits<std::int64_t>::max())
    throw InvalidArgument("mapped_degree: substituted degree out of range");
  return static_cast<std::int64_t>(d);
}

bool is_good_prime(const std::vector<std::vector<std::int64_t>>& exponent_vectors,
                   std::int64_t D, std::int64_t p) {
  if (exponent_vectors.empty()) return true;
  KroneckerMap map =
      make_kronecker_map(static_cast<int>(exponent_vectors.front().size()), D, p);
  std::vector<std::int64_t> degrees;
  degrees.reserve(exponent_vectors.size());
  for (const auto& e : exponent_vectors) degrees.push_back(mapped_degree(e, map));
  std::sort(degrees.begin(), degrees.end());
  return std::adjacent_find(degrees.begin(), degrees.end()) == degrees.end();
}

SparsePoly kron_image(const MultiPoly& f, const KroneckerMap& map) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms())
    terms.push_back(Term{t.coeff, mapped_degree(t.exponents, map)});
  return SparsePoly::from_terms(std::move(terms));  // collisions merge here
}

SparsePoly diversified_image(const MultiPoly& f, const DiversifiedMap& map) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Rational coeff = t.coeff;
    for (int i = 0; i < map.base.nvars; ++i)
      coeff *= pow_ui(map.qs[i], static_cast<std::uint64_t>(t.exponents[i]));
    terms.push_back(Term{std::move(coeff), mapped_degree(t.exponents, map.base)});
  }
  return SparsePoly::from_terms(std::move(terms));
}

std::int64_t good_prime_count_bound(int n, std::int64_t D, std::int64_t T) {
  if (n < 1 || D < 1 || T < 1)
    throw InvalidArgument("good_prime_count_bound: n, D, T must be >= 1");

  // N = floor(T(T-1)/2 * log2 M - T^2/4 + T/2) + 1 with M = (D+1)^n - 1.
  // Scaling the floor argument by 4 makes every piece an integer except the
  // log, and 4 * T(T-1)/2 * log2 M = log2(M^(2T(T-1))) is compared against
  // powers of two exactly via the bit length of M^(2T(T-1)).
  Integer M = pow_ui(Integer(D) + 1, static_cast<std::uint64_t>(n)) - 1;
  Integer exponent = 2 * Integer(T) * (T - 1);
  Integer power = pow_ui(M, exponent.get_ui());
  Integer floor_log2 = static_cast<unsigned long>(bit_length(power) - 1);

  Integer scaled = floor_log2 + Integer(2) * T - Integer(T) * T;  // 4*(the floor argument)
  Integer f;
  mpz_fdiv_q_ui(f.get_mpz_t(), scaled.get_mpz_t(), 4);
  Integer N = f + 1;
  if (N < 1) N = 1;  // degenerate corners of the formula; one prime always needed
  if (!N.fits_slong_p())
    throw InvalidArgument("good_prime_count_bound: bound out of range");
  return N.get_si();
}

std::vector<std::int64_t> first_odd_primes(std::int64_t N) {
  if (N < 1) throw InvalidArgument("first_odd_primes: N must be >= 1");
  auto ps = first_primes(N + 1);
  return {ps.begin() + 1, ps.end()};  // drop 2
}

namespace {

// Rational brackets of ln(x) for integer x >= 2. Reduce to [1, 2) by
// dividing out 2^r, then sum the atanh series at z = (m-1)/(m+1) <= 1/3,
// whose tail is geometrically bounded.
std::pair<Rational, Rational> ln_brackets(const Integer& x) {
  static const Rational kLn2Lo("6931471805599453094/10000000000000000000");
  static const Rational kLn2Hi("6931471805599453095/10000000000000000000");

  const std::size_t r = bit_length(x) - 1;  // x / 2^r in [1, 2)
  Rational m = make_rational(x, pow_ui(Integer(2), r));
  Rational z = (m - 1) / (m + 1);

  Rational sum(0);
  Rational zpow = z;
  const Rational z2 = z * z;
  const int kTerms = 24;
  for (int k = 0; k < kTerms; ++k) {
    sum += zpow / (2 * k + 1);
    zpow *= z2;
  }
  Rational lo = 2 * sum;
  // tail <= z^(2K+1) / ((2K+1)(1 - z^2))
  Rational tail = zpow / ((2 * kTerms + 1) * (1 - z2));
  Rational hi = lo + 2 * tail;

  Rational rr(static_cast<unsigned long>(r));
  return {rr * kLn2Lo + lo, rr * kLn2Hi + hi};
}

}  // namespace

Rational lambda_bound(int n, std::int64_t T, std::int64_t D) {
  if (n < 1 || T < 1) throw InvalidArgument("lambda_bound: n, T must be >= 1");
  if (D < 2) throw InvalidArgument("lambda_bound: requires D >= 2");
  Integer k = Integer(n) * T * (T - 1);
  if (k == 0) return 21;
  Rational v = Rational(5, 3) * k * ln_brackets(D).second;
  return std::max(Rational(21), v);
}

std::int64_t random_prime_in(const Rational& lo, const Rational& hi, Rng& rng) {
  Integer lo_i = ceil_q(lo);
  Integer hi_i = floor_q(hi);
  if (lo_i < 2) lo_i = 2;
  if (!hi_i.fits_slong_p())
    throw InvalidArgument("random_prime_in: range too large");
  if (hi_i < lo_i) throw InternalError("random_prime_in: empty range");
  auto primes = primes_in_range(lo_i.get_si(), hi_i.get_si());
  if (primes.empty())
    throw InternalError("random_prime_in: no prime in [" + lo_i.get_str() +
                        ", " + hi_i.get_str() + "]");
  return primes[rng.below(primes.size())];
}

PrimePlan make_prime_plan(int n, std::int64_t D, std::int64_t T) {
  PrimePlan plan;
  plan.candidate_count = good_prime_count_bound(n, D, T);
  plan.primes = first_odd_primes(plan.candidate_count);
  plan.lambda = (D >= 2) ? lambda_bound(n, T, D) : Rational(21);
  return plan;
}

}  // namespace spi
