#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planar5 {

enum class ErrorCode {
  // Input / validation.
  LoopEdge,
  DuplicateNeighbor,
  AsymmetricAdjacency,
  NotPlanarEmbedding,
  VertexOutOfRange,
  NotConnected,
  UntriangulatableFace,
  ParseError,
  UnknownName,
  BadColorPair,
  InvalidArgument,
  // Internal tripwires: these indicate a broken invariant, never bad input.
  DiagonalContradiction,
  SchemeExhausted,
  CompletenessBreach,
  SumMismatch,
  ValidationFailure,
};

std::string_view to_string(ErrorCode code);

/// True for error codes that signal a violated internal invariant rather than
/// a problem with the caller's input.
bool is_tripwire(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace planar5
