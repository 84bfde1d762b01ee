#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seqrecon {

// Machine-readable reason attached to every library error.
enum class ErrorCode {
  kParse,
  kInvalidSymbol,
  kAlphabetMismatch,
  kLengthMismatch,
  kDomain,
  kOutsideTheoremRange,
  kResourceCap,
  kBudgetExceeded,
  kUnknownClaim,
  kRetryExhausted,
  kOverflow,
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

// Refusal from an exhaustive routine whose estimated work exceeds the budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(double estimate, double budget, const std::string& what)
      : Error(ErrorCode::kBudgetExceeded, what),
        estimate_(estimate),
        budget_(budget) {}

  double estimate() const noexcept { return estimate_; }
  double budget() const noexcept { return budget_; }

 private:
  double estimate_;
  double budget_;
};

}  // namespace seqrecon
