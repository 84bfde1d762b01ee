#include "seqrecon/error.hpp"

namespace seqrecon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kInvalidSymbol: return "invalid_symbol";
    case ErrorCode::kAlphabetMismatch: return "alphabet_mismatch";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kDomain: return "domain_error";
    case ErrorCode::kOutsideTheoremRange: return "outside_theorem_range";
    case ErrorCode::kResourceCap: return "resource_cap";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kUnknownClaim: return "unknown_claim";
    case ErrorCode::kRetryExhausted: return "retry_exhausted";
    case ErrorCode::kOverflow: return "overflow";
  }
  return "unknown";
}

}  // namespace seqrecon
