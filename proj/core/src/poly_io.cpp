#include <spi/poly_io.hpp>

#include <spi/errors.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace spi {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

bool decimal_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rational parse_coefficient(const std::string& tok, std::size_t line_no) {
  std::string num = tok, den = "1";
  if (auto slash = tok.find('/'); slash != std::string::npos) {
    num = tok.substr(0, slash);
    den = tok.substr(slash + 1);
  }
  std::string num_digits = num;
  if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+'))
    num_digits.erase(0, 1);
  if (!decimal_digits(num_digits) || !decimal_digits(den))
    fail(line_no, "malformed coefficient '" + tok + "'");
  Integer n(num), d(den);
  if (d == 0) fail(line_no, "zero denominator in '" + tok + "'");
  Rational c = make_rational(n, d);
  if (c == 0) fail(line_no, "zero coefficient");
  return c;
}

std::int64_t parse_exponent(const std::string& tok, std::size_t line_no) {
  if (!decimal_digits(tok)) fail(line_no, "malformed exponent '" + tok + "'");
  Integer e(tok);
  if (!e.fits_slong_p()) fail(line_no, "exponent out of range");
  return e.get_si();
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

MultiPoly read_poly_text(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int nvars = -1;
  std::vector<MultiTerm> terms;
  std::set<std::vector<std::int64_t>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(strip_comment(line));
    if (tokens.empty()) continue;

    if (nvars < 0) {
      if (tokens.size() != 2 || tokens[0] != "vars")
        fail(line_no, "expected header 'vars <n>'");
      if (!decimal_digits(tokens[1])) fail(line_no, "malformed variable count");
      Integer n(tokens[1]);
      if (n < 1 || n > 1024) fail(line_no, "variable count out of range");
      nvars = static_cast<int>(n.get_si());
      continue;
    }

    if (tokens.size() != static_cast<std::size_t>(nvars) + 1)
      fail(line_no, "expected <coeff> followed by " + std::to_string(nvars) +
                        " exponent(s)");
    MultiTerm term;
    term.coeff = parse_coefficient(tokens[0], line_no);
    term.exponents.reserve(nvars);
    for (int i = 0; i < nvars; ++i)
      term.exponents.push_back(parse_exponent(tokens[1 + i], line_no));
    if (!seen.insert(term.exponents).second)
      fail(line_no, "duplicate exponent vector");
    terms.push_back(std::move(term));
  }
  if (nvars < 0) throw ParseError("missing 'vars <n>' header");
  return MultiPoly::from_terms(nvars, std::move(terms));
}

MultiPoly parse_poly_text(const std::string& text) {
  std::istringstream in(text);
  return read_poly_text(in);
}

MultiPoly load_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_poly_text(in);
}

void write_poly_text(std::ostream& out, const MultiPoly& poly) {
  out << "vars " << poly.nvars() << "\n";
  for (const auto& t : poly.terms()) {
    out << t.coeff.get_str();
    for (auto e : t.exponents) out << ' ' << e;
    out << "\n";
  }
}

std::string poly_to_text(const MultiPoly& poly) {
  std::ostringstream out;
  write_poly_text(out, poly);
  return out.str();
}

void print_terms(std::ostream& out, const SparsePoly& poly) {
  if (poly.is_zero()) {
    out << "0\n";
    return;
  }
  for (const auto& t : poly.terms())
    out << t.coeff.get_str() << ' ' << t.degree << "\n";
}

void print_terms(std::ostream& out, const MultiPoly& poly) {
  if (poly.is_zero()) {
    out << "0\n";
    return;
  }
  for (const auto& t : poly.terms()) {
    out << t.coeff.get_str();
    for (auto e : t.exponents) out << ' ' << e;
    out << "\n";
  }
}

}  // namespace spi
