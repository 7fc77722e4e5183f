#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agroup {

enum class ErrorCode {
  NonPrime,
  SizeCapExceeded,
  ZeroInverse,
  MixedFields,
  OrderDoesNotDivide,
  UnknownElement,
  GeneratorsDoNotGenerate,
  LatticeCapExceeded,
  NotNormal,
  PrimeDoesNotDivide,
  InvalidAction,
  WrongOrder,
  BadParams,
  NotAGroup,
  TooManyPrimes,
  DecompositionInvariantFailed,
  NotFamilyGroup,
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

/// Resource caps shared by enumeration and lattice computations.
struct Limits {
  std::size_t element_cap = 1'000'000;
  std::size_t lattice_cap = 10'000;
};

}  // namespace agroup
