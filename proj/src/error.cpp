#include "qrank/error.hpp"

namespace qrank {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::EvenRootOfNegative: return "EvenRootOfNegative";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::RootOfUnity: return "RootOfUnity";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::RatioOne: return "RatioOne";
    case ErrorKind::FrobeniusInCharZero: return "FrobeniusInCharZero";
    case ErrorKind::ZeroIndex: return "ZeroIndex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qrank
