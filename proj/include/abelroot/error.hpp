#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abelroot {

// Stable error codes. The CLI maps them onto exit codes, tests match on them.
enum class ErrorCode {
  VariableMismatch,
  DivisionByZero,
  ZeroPolynomial,
  DegenerateLeading,
  NonMonicDivisor,
  NonExactDivision,
  InvalidProblem,
  WeightZeroAtOrigin,
  EmptyKernel,
  SingularIntegrand,
  NonConvergence,
  BadBracket,
  OutOfDomain,
  ParameterPole,
  Syntax,
  Usage,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace abelroot
