#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pathforge {

enum class ErrorCode {
  IllegalCharacter,
  UnbalancedWord,
  OddLength,
  EmptyWord,
  MalformedPair,
  InvalidArgument,
  LimitExceeded,
  ArithmeticOverflow,
  Io,
  InternalConsistency,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. `position` is 1-based and only set for parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace pathforge
