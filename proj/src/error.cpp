#include "abelroot/error.hpp"

namespace abelroot {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VariableMismatch: return "variable_mismatch";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::ZeroPolynomial: return "zero_polynomial";
    case ErrorCode::DegenerateLeading: return "degenerate_leading_coefficient";
    case ErrorCode::NonMonicDivisor: return "non_monic_divisor";
    case ErrorCode::NonExactDivision: return "non_exact_division";
    case ErrorCode::InvalidProblem: return "invalid_problem";
    case ErrorCode::WeightZeroAtOrigin: return "weight_zero_at_origin";
    case ErrorCode::EmptyKernel: return "empty_kernel";
    case ErrorCode::SingularIntegrand: return "singular_integrand";
    case ErrorCode::NonConvergence: return "nonconvergence";
    case ErrorCode::BadBracket: return "bad_bracket";
    case ErrorCode::OutOfDomain: return "out_of_domain";
    case ErrorCode::ParameterPole: return "parameter_pole";
    case ErrorCode::Syntax: return "syntax_error";
    case ErrorCode::Usage: return "usage_error";
  }
  return "unknown";
}

}  // namespace abelroot
