#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "apolar/ring.hpp"

namespace apolar {

/// Malformed polynomial text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Reads `3/2*x0^2*u1 - x1*u2 + 7` style text. Variables are `x<k>` with
/// 0 <= k < x_count and `u<k>` with 1 <= k <= u_count; in the dual alphabet
/// the same names are upper case (`X0`, `U1`).
Polynomial parse_polynomial(std::string_view text, const VariableSplit& split,
                            Alphabet alphabet = Alphabet::primal);

DiffOperator parse_operator(std::string_view text, const VariableSplit& split);

}  // namespace apolar
