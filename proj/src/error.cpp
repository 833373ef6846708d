#include "nset/error.hpp"

namespace nset {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ReversedEndpoints: return "ReversedEndpoints";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeShift: return "NegativeShift";
    case ErrorKind::InvalidChainSpec: return "InvalidChainSpec";
    case ErrorKind::NotRelativelyPrime: return "NotRelativelyPrime";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NonPositiveElement: return "NonPositiveElement";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotAnNSet: return "NotAnNSet";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
    case ErrorKind::WeightCapExceeded: return "WeightCapExceeded";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "UnknownError";
}

}  // namespace nset
