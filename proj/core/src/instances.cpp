#include <spi/instances.hpp>

#include <spi/errors.hpp>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace spi {

Rational random_coefficient(Rng& rng, const Integer& C, const Integer& H) {
  if (C < 1 || H < 1)
    throw InvalidArgument("random_coefficient: C, H must be >= 1");
  // Each nonzero element of A(C, H) is exactly one coprime pair (a, b) with
  // 0 < a <= H, 0 < |b| <= aC. Sampling (a, b) uniformly over the bounding
  // rectangle and rejecting off-set pairs is uniform over the set.
  const Integer b_span = C * H;
  for (;;) {
    Integer a = rng.integer_below(H) + 1;
    Integer b = rng.integer_below(2 * b_span + 1) - b_span;
    if (b == 0) continue;
    if (abs(b) > a * C) continue;
    Integer g;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    if (g != 1) continue;
    return make_rational(b, a);
  }
}

SparsePoly random_sparse_poly(Rng& rng, const Integer& C, const Integer& H,
                              std::int64_t D, std::int64_t term_count,
                              bool force_top_degree) {
  if (D < 0) throw InvalidArgument("random_sparse_poly: negative degree bound");
  term_count = std::min(term_count, D + 1);
  std::set<std::int64_t> degrees;
  if (force_top_degree && term_count >= 1) degrees.insert(D);
  while (static_cast<std::int64_t>(degrees.size()) < term_count)
    degrees.insert(rng.int_in(0, D));
  std::vector<Term> terms;
  terms.reserve(degrees.size());
  for (auto d : degrees) terms.push_back(Term{random_coefficient(rng, C, H), d});
  return SparsePoly::from_terms(std::move(terms));
}

namespace {

Integer binom(std::int64_t n, std::int64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Number of exponent vectors in n variables with total degree <= D.
Integer simplex_size(int n, std::int64_t D) { return binom(D + n, n); }

// Unranks index r into the total-degree-<=-D simplex, componentwise: the
// block with first exponent e has binom(D - e + m - 1 + 1, m) vectors for m
// remaining variables.
std::vector<std::int64_t> unrank_simplex(int n, std::int64_t D, Integer r) {
  std::vector<std::int64_t> exps(n, 0);
  std::int64_t budget = D;
  for (int i = 0; i < n; ++i) {
    const int remaining = n - i - 1;
    for (std::int64_t e = 0;; ++e) {
      Integer block = simplex_size(remaining, budget - e);
      if (r < block) {
        exps[i] = e;
        budget -= e;
        break;
      }
      r -= block;
    }
  }
  return exps;
}

}  // namespace

MultiPoly random_multi_poly(Rng& rng, int nvars, const Integer& C,
                            const Integer& H, std::int64_t D,
                            std::int64_t term_count) {
  if (nvars < 1) throw InvalidArgument("random_multi_poly: nvars must be >= 1");
  if (D < 0) throw InvalidArgument("random_multi_poly: negative degree bound");
  Integer space = simplex_size(nvars, D);
  if (space < term_count) term_count = space.get_si();

  std::set<std::vector<std::int64_t>> vectors;
  while (static_cast<std::int64_t>(vectors.size()) < term_count)
    vectors.insert(unrank_simplex(nvars, D, rng.integer_below(space)));

  std::vector<MultiTerm> terms;
  terms.reserve(vectors.size());
  for (auto& v : vectors)
    terms.push_back(MultiTerm{random_coefficient(rng, C, H), v});
  return MultiPoly::from_terms(nvars, std::move(terms));
}

}  // namespace spi
