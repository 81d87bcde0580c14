#pragma once

#include <stdexcept>
#include <string>

namespace cll {

enum class ErrorKind {
  NonIncreasingParameters,
  TooFewVertices,
  BadSubset,
  DimensionMismatch,
  EmptySet,
  IntegralityViolation,
  BadPivot,
  DuplicateIndex,
  InstanceTooLarge,
  UnsortedInput,
  OutOfRange,
  GuaranteeViolated,
  NoSolution,
  HypothesisViolated,
  RequiresSimplex,
  WitnessRefuted,
  NotAFacet,
  SamplingExhausted,
  DecompositionFailed,
  BadInput,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool cond, ErrorKind kind, const std::string& message) {
  if (!cond) fail(kind, message);
}

}  // namespace cll
