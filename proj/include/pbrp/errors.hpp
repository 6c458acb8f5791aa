#pragma once

#include <stdexcept>
#include <string>

namespace pbrp {

enum class ErrorCode {
  // instance / input problems
  ArityMismatch,
  NegativeQuantity,
  NonMonotoneValuation,
  UncoverableProject,
  IndexOutOfRange,
  ParseError,
  SchemaError,
  UnsupportedVoteType,
  NoVoters,
  NoApprovals,
  UniverseNotDivisibleBy3,
  // solver preconditions
  NotWpFundable,
  TooManyProjects,
  CapacityNegative,
  TableTooLarge,
  BadEpsilon,
  GraphForestMismatch,
  WrongValuationClass,
  CostsNotIdentical,
  NotLaminar,
  OracleCapExceeded,
  ScaleOverflow,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

// true for malformed-input errors, false for solver precondition failures
bool is_input_error(ErrorCode code);

}  // namespace pbrp
