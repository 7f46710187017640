#pragma once

#include <stdexcept>
#include <string>

namespace untwist {

// Operand shapes are incompatible (non-square where square is required,
// inner dimensions disagree, ...).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// elementary_factorization requires determinant exactly +1.
struct NotSL : std::domain_error {
  using std::domain_error::domain_error;
};

// A 1-based curve/handle index is outside 1..g, or i == j where two
// distinct indices are required.
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// A HeegaardDatum failed validation where a valid one is a precondition.
struct InvalidDatum : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Script genus does not match the datum (or certificate parts disagree).
struct GenusMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Text input could not be parsed; line is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_
                                     : what_),
        line(line_) {}
};

// Pretzel parameters with an even entry describe a link, not a knot.
struct NotAKnot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Diagram exceeds the crossing budget of the exponential state sum.
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A postcondition the algorithms guarantee failed; indicates a bug, not
// bad input.
struct InternalInvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace untwist
