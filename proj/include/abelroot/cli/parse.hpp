#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "abelroot/derive/problem.hpp"
#include "abelroot/error.hpp"

namespace abelroot {

/// Syntax error carrying the 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Sum of terms `c*v^k`, `c v^k`, `v^k`, `c` with c an integer or a/b and v
/// any letter in `letters`. Whitespace is ignored. The result is in `var`.
UPoly parse_polynomial(std::string_view text, Var var, std::string_view letters);

/// Polynomial in x with R(0) = 0 and degree >= 2. Throws ParseError on
/// malformed text and InvalidProblem otherwise.
ProblemSpec parse_problem(std::string_view text);

/// Weight polynomial in t (or q).
UPoly parse_weight(std::string_view text);

}  // namespace abelroot
