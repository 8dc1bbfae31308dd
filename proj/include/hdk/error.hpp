#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdk {

enum class ErrorCode {
  UnknownGenerator,
  DuplicateName,
  BoundaryIllTyped,
  BoundaryIllDefined,
  DimensionMismatch,
  HeightOutOfRange,
  IllDefined,
  EmbeddingIllDefined,
  NotGlobular,
  BoundaryMismatch,
  DepthOutOfRange,
  NotARedex,
  VariantMismatch,
  NotABlock,
  NotACrossingPattern,
  MalformedParams,
  PathsNotGlobular,
  NoMatchAtLocation,
  SyntaxError,
  UnknownReference,
  IllDefinedDiagram,
  StepInapplicable,
  Unsupported,
};

std::string_view to_string(ErrorCode code);

/// Every kernel failure surfaces as an `Error` carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hdk
