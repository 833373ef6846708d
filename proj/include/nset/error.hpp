#pragma once

#include <stdexcept>
#include <string>

namespace nset {

enum class ErrorKind {
  EmptyInput,
  ReversedEndpoints,
  DimensionMismatch,
  NegativeShift,
  InvalidChainSpec,
  NotRelativelyPrime,
  EmptySet,
  NonPositiveElement,
  InvalidParams,
  NotAnNSet,
  InvalidTarget,
  WeightCapExceeded,
  SchemaViolation,
  UnknownCommand,
};

const char* kind_name(ErrorKind kind);

/// Domain error carrying a machine-readable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nset
