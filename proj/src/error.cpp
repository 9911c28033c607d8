#include "minisphere/error.hpp"

namespace minisphere {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::ZeroNormal: return "ZeroNormal";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonFinite: return "NonFinite";
  }
  return "Unknown";
}

}  // namespace minisphere
