#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace whg {

enum class ErrorCode {
  ParseError,
  InvalidOrder,
  NonUniformEdge,
  RepeatedVertexInEdge,
  DuplicateEdge,
  NonPositiveWeight,
  NonFiniteWeight,
  VertexIndexOutOfRange,
  IsolatedVertex,
  SameVertex,
  EmptySet,
  TOutOfRange,
  DimensionMismatch,
  TooLarge,
  ZeroVector,
  UnsupportedTensorKind,
  Disconnected,
  MaxIterationsExceeded,
  NotRegularUniform,
  NotAnEigenpair,
  InconsistentParameters,
  ConnectivityUnreachable,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` is stable and
// is what the CLI prints in its structured error message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace whg
