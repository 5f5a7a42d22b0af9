#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stacky {

enum class ErrorCode {
  NonPrime,
  DegreeOutOfRange,
  CardinalityCap,
  DivisionByZero,
  ZeroElement,
  PartitionOutOfRange,
  CounterOverflow,
  WildCharacteristic,
  DegreeNonPositive,
  BudgetExceeded,
  WeightMismatch,
  DegreeTooSmall,
  UnstableRange,
  MissingLPolynomial,
  GenusMismatch,
  UnknownModuli,
  InvalidArgument,
  InternalInvariant,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stacky
