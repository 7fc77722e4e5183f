#include "agroup/error.hpp"

namespace agroup {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::GeneratorsDoNotGenerate: return "GeneratorsDoNotGenerate";
    case ErrorCode::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::PrimeDoesNotDivide: return "PrimeDoesNotDivide";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::TooManyPrimes: return "TooManyPrimes";
    case ErrorCode::DecompositionInvariantFailed: return "DecompositionInvariantFailed";
    case ErrorCode::NotFamilyGroup: return "NotFamilyGroup";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace agroup
