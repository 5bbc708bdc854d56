#include "shd/extended_distance.hpp"

#include <charconv>
#include <cmath>

#include "shd/error.hpp"

namespace shd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidSimplex: return "InvalidSimplex";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::EmptyCloud: return "EmptyCloud";
    case ErrorCode::AmbientDimMismatch: return "AmbientDimMismatch";
    case ErrorCode::MaxDimMismatch: return "MaxDimMismatch";
    case ErrorCode::NonInjective: return "NonInjective";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::LastVertex: return "LastVertex";
    case ErrorCode::NonPositiveEps: return "NonPositiveEps";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVertexInSimplex: return "UnknownVertexInSimplex";
  }
  return "Unknown";
}

ExtendedDistance::ExtendedDistance(double value) : value_(value) {
  if (std::isnan(value) || value < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "distance must be nonnegative, got " + std::to_string(value));
  }
}

std::string ExtendedDistance::to_string() const {
  if (is_infinite()) return "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, end);
}

}  // namespace shd
