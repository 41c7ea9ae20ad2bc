#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parorb {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  ConstraintViolation,
  SizeMismatch,
  AmbientMismatch,
  ShapeMismatch,
  NotClosedUnderMultiplication,
  IndexOutOfRange,
  BlockMismatch,
  NotACover,
  NotNormalForm,
  NotTwoNilpotent,
  ReconstructionMismatch,
  ZeroLabel,
  UnknownId,
  DimMismatch,
  ZeroLambda,
  ZeroParameter,
  RangeError,
};

std::string_view error_code_name(ErrorCode code);

// Domain error carrying a machine-readable code. `index` is a 1-based
// block/vertex index when the error names one (ConstraintViolation), else 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int index = 0)
      : std::runtime_error(message), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  int index_;
};

}  // namespace parorb
