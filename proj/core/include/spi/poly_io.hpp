#ifndef SPI_POLY_IO_HPP
#define SPI_POLY_IO_HPP

#include <spi/poly.hpp>

#include <iosfwd>
#include <string>

namespace spi {

// Polynomial text format. UTF-8 lines, '#' starts a comment. Header line
//   vars <n>
// then one term per line:
//   <num>[/<den>] <e1> <e2> ... <en>
// Zero coefficients and duplicate exponent vectors are rejected.
MultiPoly read_poly_text(std::istream& in);
MultiPoly parse_poly_text(const std::string& text);
MultiPoly load_poly_file(const std::string& path);

void write_poly_text(std::ostream& out, const MultiPoly& poly);
std::string poly_to_text(const MultiPoly& poly);

// Canonical term lines without the header: "<coeff> <degree>" per line for
// univariate output, "<coeff> <e1> ... <en>" for multivariate; a single "0"
// for the zero polynomial. Coefficients print as num or num/den.
void print_terms(std::ostream& out, const SparsePoly& poly);
void print_terms(std::ostream& out, const MultiPoly& poly);

}  // namespace spi

#endif
