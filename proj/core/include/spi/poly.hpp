#ifndef SPI_POLY_HPP
#define SPI_POLY_HPP

#include <spi/blackbox.hpp>
#include <spi/numbers.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace spi {

// c * x^degree, c != 0.
struct Term {
  Rational coeff;
  std::int64_t degree = 0;

  bool operator==(const Term&) const = default;
};

// Univariate polynomial in canonical sparse form: terms sorted by strictly
// increasing degree, no zero coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;

  // Canonicalizes: sorts, merges equal degrees, strips zeros. Idempotent.
  static SparsePoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Degree of the polynomial; -1 for the zero polynomial.
  std::int64_t degree() const { return terms_.empty() ? -1 : terms_.back().degree; }

  // Exact value at x (Horner over degree gaps).
  Rational evaluate(const Rational& x) const;

  bool operator==(const SparsePoly&) const = default;

 private:
  std::vector<Term> terms_;
};

// c * x1^e1 ... xn^en with c != 0 and nonnegative exponents.
struct MultiTerm {
  Rational coeff;
  std::vector<std::int64_t> exponents;

  bool operator==(const MultiTerm&) const = default;
};

// Graded-lexicographic order on exponent vectors: total degree first, then
// leftmost differing exponent. Used as the canonical term order.
bool graded_lex_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// Multivariate polynomial in canonical sparse form: pairwise distinct
// exponent vectors, terms in ascending graded-lex order.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars);

  static MultiPoly from_terms(int nvars, std::vector<MultiTerm> terms);

  int nvars() const { return nvars_; }
  const std::vector<MultiTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Max total degree over terms; -1 for the zero polynomial.
  std::int64_t total_degree() const;

  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const MultiPoly&) const = default;

 private:
  int nvars_ = 1;
  std::vector<MultiTerm> terms_;
};

Rational eval_sparse(const SparsePoly& poly, const Rational& x);
Rational eval_sparse(const MultiPoly& poly, std::span<const Rational> point);

// Wraps a known polynomial behind the evaluation contract (tests, CLI).
BlackBox wrap_blackbox(const SparsePoly& poly);
BlackBox wrap_blackbox(const MultiPoly& poly);

SparsePoly to_univariate(const MultiPoly& poly);  // requires nvars == 1
MultiPoly to_multivariate(const SparsePoly& poly);

}  // namespace spi

#endif
