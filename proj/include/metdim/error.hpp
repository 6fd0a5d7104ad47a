#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metdim {

enum class ErrorCode {
  InvalidEdge,
  TooSmall,
  NotConnected,
  InvalidVertex,
  EmptySet,
  TooLarge,
  InvalidAnchor,
  InvalidSpec,
  RuleViolation,
  GenerationFailed,
  NotATree,
  NotUnicyclic,
  IsAPath,
  TooMany,
  Unsupported,
  ParseError,
  HeaderMismatch,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library. The code is stable; the message is
// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace metdim
