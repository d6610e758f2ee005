#include "planar5/error.hpp"

namespace planar5 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::UntriangulatableFace: return "UntriangulatableFace";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadColorPair: return "BadColorPair";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DiagonalContradiction: return "DiagonalContradiction";
    case ErrorCode::SchemeExhausted: return "SchemeExhausted";
    case ErrorCode::CompletenessBreach: return "CompletenessBreach";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
  }
  return "Unknown";
}

bool is_tripwire(ErrorCode code) {
  switch (code) {
    case ErrorCode::DiagonalContradiction:
    case ErrorCode::SchemeExhausted:
    case ErrorCode::CompletenessBreach:
    case ErrorCode::SumMismatch:
    case ErrorCode::ValidationFailure:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace planar5
