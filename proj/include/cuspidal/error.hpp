#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cusp {

using Int = std::int64_t;

enum class ErrorCode {
  NotIncreasing,
  DivisibilityViolation,
  NotCoprime,
  MultiplicityTooSmall,
  InternalInconsistency,
  OddMilnor,
  EmptyList,
  NotAlternating,
  NotSymmetric,
  SurgeryTooSmall,
  SpinCOutOfRange,
  MultipleCusps,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cusp
