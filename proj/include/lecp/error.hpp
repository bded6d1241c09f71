#pragma once

#include <stdexcept>
#include <string>

namespace lecp {

enum class ErrorCode {
  Collision,
  NonpositiveValue,
  BadRatio,
  NegativeStart,
  IndexBeyondSupport,
  LengthMismatch,
  NoConvergence,
  CheckFailed,
  Internal,
  Parse,
  Io,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lecp
