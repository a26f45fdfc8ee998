#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewbrace {

enum class ErrorCode {
  BadInput,
  NotLatinSquare,
  NoIdentityAtZero,
  NotAssociative,
  NotNilpotent,
  OrderOutOfCatalog,
  BadAdditiveGroup,
  BadMultiplicativeGroup,
  IdentityMismatch,
  DistributivityFails,
  NotAnIdeal,
  NotNilpotentType,
  NotPermutation,
  RNotBijective,
  BraidFails,
  InducedMapIllDefined,
  NotSupersoluble,
  NotAHomomorphism,
  ConditionFails,
  BadParameters,
  OrderTooLarge,
  MismatchFound,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code; the
// message names the offending cell, triple or parameter.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skewbrace
