#ifndef SPI_ERRORS_HPP
#define SPI_ERRORS_HPP

#include <stdexcept>

namespace spi {

// Caller handed us something malformed (bad bounds, arity mismatch, ...).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The data is well-formed but lies outside the declared coefficient model,
// e.g. a probe residue that matches no admissible coefficient.
struct NotInDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An invariant the algorithms guarantee was violated; indicates a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Input text could not be parsed.
struct ParseError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

}  // namespace spi

#endif
