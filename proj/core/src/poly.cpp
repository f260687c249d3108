#include <spi/poly.hpp>

#include <spi/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace spi {

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.degree < 0) throw InvalidArgument("SparsePoly: negative degree");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.degree < b.degree; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().degree == t.degree)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  SparsePoly p;
  p.terms_ = std::move(merged);
  return p;
}

Rational SparsePoly::evaluate(const Rational& x) const {
  if (terms_.empty()) return Rational(0);
  // Horner over the degree gaps, highest term first.
  Rational acc = terms_.back().coeff;
  for (std::size_t i = terms_.size() - 1; i-- > 0;) {
    acc *= pow_ui(x, static_cast<std::uint64_t>(terms_[i + 1].degree - terms_[i].degree));
    acc += terms_[i].coeff;
  }
  acc *= pow_ui(x, static_cast<std::uint64_t>(terms_.front().degree));
  return acc;
}

bool graded_lex_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t ta = 0, tb = 0;
  for (auto e : a) ta += e;
  for (auto e : b) tb += e;
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw InvalidArgument("MultiPoly: nvars must be >= 1");
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<MultiTerm> terms) {
  MultiPoly p(nvars);
  // Merge by exponent vector, then order graded-lex.
  std::map<std::vector<std::int64_t>, Rational> merged;
  for (auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != nvars)
      throw InvalidArgument("MultiPoly: exponent vector arity mismatch");
    for (auto e : t.exponents) {
      if (e < 0) throw InvalidArgument("MultiPoly: negative exponent");
    }
    merged[t.exponents] += t.coeff;
  }
  std::vector<MultiTerm> out;
  out.reserve(merged.size());
  for (auto& [exps, coeff] : merged) {
    if (coeff != 0) out.push_back(MultiTerm{std::move(coeff), exps});
  }
  std::sort(out.begin(), out.end(), [](const MultiTerm& a, const MultiTerm& b) {
    return graded_lex_less(a.exponents, b.exponents);
  });
  p.terms_ = std::move(out);
  return p;
}

std::int64_t MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // graded order: the last term carries the max total degree
  std::int64_t d = 0;
  for (auto e : terms_.back().exponents) d += e;
  return d;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw InvalidArgument("MultiPoly: point arity mismatch");
  if (terms_.empty()) return Rational(0);

  // Per-variable power tables up to the largest exponent used.
  std::vector<std::vector<Rational>> powers(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    std::int64_t max_e = 0;
    for (const auto& t : terms_) max_e = std::max(max_e, t.exponents[v]);
    auto& table = powers[v];
    table.reserve(max_e + 1);
    table.emplace_back(1);
    for (std::int64_t e = 1; e <= max_e; ++e) table.push_back(table.back() * point[v]);
  }

  Rational sum(0);
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (int v = 0; v < nvars_; ++v) {
      if (t.exponents[v] > 0) prod *= powers[v][t.exponents[v]];
    }
    sum += prod;
  }
  return sum;
}

Rational eval_sparse(const SparsePoly& poly, const Rational& x) {
  return poly.evaluate(x);
}

Rational eval_sparse(const MultiPoly& poly, std::span<const Rational> point) {
  return poly.evaluate(point);
}

BlackBox wrap_blackbox(const SparsePoly& poly) {
  return BlackBox(1, [poly](std::span<const Rational> point) {
    return poly.evaluate(point[0]);
  });
}

BlackBox wrap_blackbox(const MultiPoly& poly) {
  return BlackBox(poly.nvars(), [poly](std::span<const Rational> point) {
    return poly.evaluate(point);
  });
}

SparsePoly to_univariate(const MultiPoly& poly) {
  if (poly.nvars() != 1) throw InvalidArgument("to_univariate: nvars != 1");
  std::vector<Term> terms;
  terms.reserve(poly.term_count());
  for (const auto& t : poly.terms()) terms.push_back(Term{t.coeff, t.exponents[0]});
  return SparsePoly::from_terms(std::move(terms));
}

MultiPoly to_multivariate(const SparsePoly& poly) {
  std::vector<MultiTerm> terms;
  terms.reserve(poly.term_count());
  for (const auto& t : poly.terms())
    terms.push_back(MultiTerm{t.coeff, {t.degree}});
  return MultiPoly::from_terms(1, std::move(terms));
}

}  // namespace spi
