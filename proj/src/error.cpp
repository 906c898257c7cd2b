#include "whg/error.hpp"

namespace whg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::RepeatedVertexInEdge: return "RepeatedVertexInEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::VertexIndexOutOfRange: return "VertexIndexOutOfRange";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::UnsupportedTensorKind: return "UnsupportedTensorKind";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::NotRegularUniform: return "NotRegularUniform";
    case ErrorCode::NotAnEigenpair: return "NotAnEigenpair";
    case ErrorCode::InconsistentParameters: return "InconsistentParameters";
    case ErrorCode::ConnectivityUnreachable: return "ConnectivityUnreachable";
  }
  return "Unknown";
}

}  // namespace whg
