#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wongseq {

enum class ErrorCode {
  NonPrimeModulus,
  ReducibleModulus,
  FieldTooSmall,
  FieldMismatch,
  DimMismatch,
  NotSquare,
  NotMember,
  IdentityMissing,
  EmptySpace,
  SingularS,
  BudgetExceeded,
  Unsupported,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Typed failure raised on contract violations. Algorithmic "no" answers
// (fail, inconclusive, failed_po) are values, never exceptions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wongseq
