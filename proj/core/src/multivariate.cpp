#include <spi/multivariate.hpp>

#include <spi/domain.hpp>
#include <spi/errors.hpp>
#include <spi/univariate.hpp>

#include <algorithm>
#include <atomic>
#include <utility>
#include <vector>

namespace spi {

namespace {

std::atomic<std::uint64_t> g_window_checks{0};
std::atomic<std::uint64_t> g_window_violations{0};

void validate_driver_args(const BlackBox& mbb, int nvars, std::int64_t D,
                          std::int64_t T, const Integer& C, const Integer& H,
                          std::span<const Integer> qs) {
  if (nvars < 1) throw InvalidArgument("mpoly: nvars must be >= 1");
  if (mbb.arity() != nvars) throw InvalidArgument("mpoly: box arity mismatch");
  if (D < 1) throw InvalidArgument("mpoly: D must be >= 1");
  if (T < 1) throw InvalidArgument("mpoly: T must be >= 1");
  if (C < 1) throw InvalidArgument("mpoly: C must be >= 1");
  if (H < 1) throw InvalidArgument("mpoly: H must be >= 1");
  if (static_cast<int>(qs.size()) != nvars)
    throw InvalidArgument("mpoly: need one diversification prime per variable");
}

struct Candidate {
  std::int64_t prime = 0;
  SparsePoly image;
};

// Interpolates the substituted box at every candidate prime. Failures are
// counted, not kept. A recovered image whose degree exceeds D(p-1) cannot
// equal f_{x,p} and is treated as a failure as well.
std::vector<Candidate> interpolate_candidates(
    const BlackBox& mbb, int nvars, std::int64_t D,
    const std::vector<std::int64_t>& primes, const CoefficientDomain& domain,
    std::optional<std::int64_t> term_bound, MpolyStats& stats) {
  UnivariateProbe probe = make_probe(domain);
  PowerCache powers(probe.beta);  // shared across candidates: same beta

  std::vector<Candidate> kept;
  for (std::int64_t p : primes) {
    KroneckerMap map = make_kronecker_map(nvars, D, p);
    BlackBox sub = substituted_blackbox(mbb, map);
    auto image = detail::upoly_si_rat_impl(sub, domain, probe, term_bound, powers);
    if (image && image->degree() <= D * (p - 1)) {
      kept.push_back(Candidate{p, std::move(*image)});
    } else {
      ++stats.failed_candidates;
    }
  }
  return kept;
}

// Most terms first; ties broken by smaller prime.
void order_candidates(std::vector<Candidate>& cands) {
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.image.term_count() != b.image.term_count())
                       return a.image.term_count() > b.image.term_count();
                     return a.prime < b.prime;
                   });
}

// Compares the candidate image against fresh probes of the substituted box
// at 1, 2, ..., D(p-1)+1. Since both sides have degree at most D(p-1),
// agreement everywhere proves equality.
bool verify_candidate(const BlackBox& mbb, int nvars, std::int64_t D,
                      const Candidate& cand, MpolyStats& stats) {
  KroneckerMap map = make_kronecker_map(nvars, D, cand.prime);
  BlackBox sub = substituted_blackbox(mbb, map);
  const std::int64_t points = D * (cand.prime - 1) + 1;
  for (std::int64_t j = 1; j <= points; ++j) {
    Rational x(j);
    ++stats.verification_probes;
    if (sub(x) != cand.image.evaluate(x)) return false;
  }
  return true;
}

MultiPoly decode_diversified(const BlackBox& mbb, int nvars, std::int64_t D,
                             const Integer& C, std::span<const Integer> qs,
                             const Candidate& accepted) {
  RecoveryContext ctx = make_recovery_context(accepted.image, qs, D, C);
  DiversifiedMap dmap = make_diversified_map(
      make_kronecker_map(nvars, D, accepted.prime), {qs.begin(), qs.end()});
  BlackBox g = diversified_blackbox(mbb, dmap);
  Rational u = g(Rational(ctx.beta));
  auto terms = recover_terms(u, ctx);
  if (!terms)
    throw InternalError("mpoly: recovery failed for a verified good prime");
  return MultiPoly::from_terms(nvars, std::move(*terms));
}

}  // namespace

WindowStats recovery_window_stats() {
  return WindowStats{g_window_checks.load(), g_window_violations.load()};
}

void reset_recovery_window_stats() {
  g_window_checks.store(0);
  g_window_violations.store(0);
}

RecoveryContext make_recovery_context(const SparsePoly& image,
                                      std::span<const Integer> qs,
                                      std::int64_t D, const Integer& C) {
  if (qs.empty()) throw InvalidArgument("make_recovery_context: empty qs");
  if (D < 1) throw InvalidArgument("make_recovery_context: D must be >= 1");
  RecoveryContext ctx;
  ctx.qs.assign(qs.begin(), qs.end());
  ctx.degree_bound = D;
  Integer h_max(1);
  for (const auto& t : image.terms()) {
    ctx.degrees.push_back(t.degree);
    ctx.numerators.push_back(t.coeff.get_num());
    ctx.denominators.push_back(t.coeff.get_den());
    h_max = std::max(h_max, t.coeff.get_den());
  }
  // beta = 2 C q_n^D max(H_i) + 1; q_n^D bounds the diversified coefficients
  ctx.beta = 2 * C * pow_ui(ctx.qs.back(), static_cast<std::uint64_t>(D)) * h_max + 1;
  return ctx;
}

std::optional<std::vector<MultiTerm>> recover_terms(const Rational& g_value,
                                                    const RecoveryContext& ctx) {
  const int n = static_cast<int>(ctx.qs.size());
  const std::size_t t = ctx.degrees.size();
  PowerCache powers(ctx.beta);

  Rational u = g_value;
  std::vector<MultiTerm> out;
  out.reserve(t);
  for (std::size_t idx = t; idx-- > 0;) {
    Integer beta_pow = powers.pow(static_cast<std::uint64_t>(ctx.degrees[idx]));

    // b = ceil(x - 1/2) for x = u H_i / beta^d_i
    Rational x = u * ctx.denominators[idx];
    const Integer& p_num = x.get_num();
    Integer q_den = x.get_den() * beta_pow;
    Integer b;
    mpz_cdiv_q(b.get_mpz_t(), Integer(2 * p_num - q_den).get_mpz_t(),
               Integer(2 * q_den).get_mpz_t());

    // Rounding window |x - b| < 1/2; guaranteed while beta dominates the
    // diversified coefficients.
    g_window_checks.fetch_add(1, std::memory_order_relaxed);
    if (!(abs(2 * p_num - 2 * b * q_den) < q_den)) {
      g_window_violations.fetch_add(1, std::memory_order_relaxed);
      throw InternalError("recover_terms: rounding window violated");
    }

    // b must factor as c_i * q1^e1 ... qn^en
    const Integer& c = ctx.numerators[idx];
    if (c == 0 || !mpz_divisible_p(b.get_mpz_t(), c.get_mpz_t()))
      return std::nullopt;
    Integer m = b / c;
    if (m <= 0) return std::nullopt;

    std::vector<std::int64_t> exps(n, 0);
    std::int64_t total = 0;
    for (int j = 0; j < n; ++j) {
      while (mpz_divisible_p(m.get_mpz_t(), ctx.qs[j].get_mpz_t())) {
        m /= ctx.qs[j];
        ++exps[j];
        ++total;
      }
    }
    if (m != 1) return std::nullopt;                 // leftover cofactor
    if (total > ctx.degree_bound) return std::nullopt;  // degree bound broken

    out.push_back(MultiTerm{make_rational(ctx.numerators[idx], ctx.denominators[idx]),
                            std::move(exps)});
    u -= Rational(b) / ctx.denominators[idx] * beta_pow;
  }
  if (u != 0) return std::nullopt;
  return out;
}

MultiPoly mpoly_si_mk(const BlackBox& mbb, int nvars, std::int64_t D,
                      std::int64_t T, const Integer& C, const Integer& H,
                      std::span<const Integer> qs, MpolyStats* stats) {
  validate_driver_args(mbb, nvars, D, T, C, H, qs);
  MpolyStats local;
  MpolyStats& st = stats ? *stats : local;
  st = MpolyStats{};

  PrimePlan plan = make_prime_plan(nvars, D, T);
  st.candidate_count = plan.candidate_count;

  CoefficientDomain domain = make_rational_domain(C, H);
  auto candidates =
      interpolate_candidates(mbb, nvars, D, plan.primes, domain, T, st);
  order_candidates(candidates);

  for (const auto& cand : candidates) {
    if (verify_candidate(mbb, nvars, D, cand, st)) {
      st.chosen_prime = cand.prime;
      return decode_diversified(mbb, nvars, D, C, qs, cand);
    }
    ++st.discarded_candidates;
  }
  throw InternalError(
      "mpoly_si_mk: no candidate survived verification; input violates the "
      "declared bounds");
}

MultiPoly mpoly_si_mk_int(const BlackBox& mbb, int nvars, std::int64_t D,
                          std::int64_t T, const Integer& C,
                          std::span<const Integer> qs, MpolyStats* stats) {
  validate_driver_args(mbb, nvars, D, T, C, Integer(1), qs);
  MpolyStats local;
  MpolyStats& st = stats ? *stats : local;
  st = MpolyStats{};

  PrimePlan plan = make_prime_plan(nvars, D, T);
  st.candidate_count = plan.candidate_count;

  // Over the enlarged integer set |a| <= TC every image interpolates
  // exactly, collisions included, so the most-terms candidate is
  // collision-free with no verification probes at all.
  CoefficientDomain enlarged = make_rational_domain(Integer(T) * C, Integer(1));
  auto candidates = interpolate_candidates(mbb, nvars, D, plan.primes, enlarged,
                                           std::nullopt, st);
  if (candidates.empty())
    throw InternalError("mpoly_si_mk_int: no candidate interpolated");
  order_candidates(candidates);

  const Candidate& accepted = candidates.front();
  st.chosen_prime = accepted.prime;
  return decode_diversified(mbb, nvars, D, C, qs, accepted);
}

std::optional<MultiPoly> pro_mpoly_si_mk(const BlackBox& mbb, int nvars,
                                         std::int64_t D, std::int64_t T,
                                         const Integer& C, const Integer& H,
                                         std::span<const Integer> qs,
                                         std::uint64_t seed, ProStats* stats) {
  validate_driver_args(mbb, nvars, D, T, C, H, qs);
  if (D < 2) throw InvalidArgument("pro_mpoly_si_mk: requires D >= 2");

  Rational lambda = lambda_bound(nvars, T, D);
  Rng rng(seed);
  std::int64_t p = random_prime_in(lambda, 2 * lambda, rng);
  if (stats) {
    stats->prime = p;
    stats->lambda = lambda;
  }

  KroneckerMap map = make_kronecker_map(nvars, D, p);
  BlackBox sub = substituted_blackbox(mbb, map);
  auto image = upoly_si_rat(sub, C, H, T);
  if (!image || image->degree() > D * (p - 1)) return std::nullopt;

  RecoveryContext ctx = make_recovery_context(*image, qs, D, C);
  DiversifiedMap dmap =
      make_diversified_map(std::move(map), {qs.begin(), qs.end()});
  BlackBox g = diversified_blackbox(mbb, dmap);
  Rational u = g(Rational(ctx.beta));
  auto terms = recover_terms(u, ctx);
  if (!terms) return std::nullopt;
  return MultiPoly::from_terms(nvars, std::move(*terms));
}

}  // namespace spi
