#pragma once

#include <stdexcept>
#include <string>

namespace minisphere {

enum class ErrorCode {
  EmptyInput,
  InvalidK,
  ZeroNormal,
  TooLarge,
  UnknownKind,
  InvalidParams,
  InsufficientSamples,
  ParseError,
  NonFinite,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace minisphere
