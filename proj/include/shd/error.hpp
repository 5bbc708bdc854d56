#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shd {

enum class ErrorCode {
  InvalidArgument,
  InvalidSimplex,
  NotDownwardClosed,
  EmptyComplex,
  EmptyCloud,
  AmbientDimMismatch,
  MaxDimMismatch,
  NonInjective,
  VertexNotFound,
  LastVertex,
  NonPositiveEps,
  UnsupportedDimension,
  IoError,
  EmptyFile,
  RaggedRows,
  NonNumericCell,
  ParseError,
  UnknownVertexInSimplex,
};

std::string_view to_string(ErrorCode code);

/// Every contract violation in the library surfaces as this exception.
/// The code identifies the failed precondition; the message carries context
/// (row numbers, offending ids) for the user.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shd
