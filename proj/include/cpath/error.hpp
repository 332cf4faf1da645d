#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cpath {

enum class ErrorCode {
  InvalidSpace,
  UnknownEdge,
  UnknownPoint,
  IllComposed,
  NoMatch,
  BadPosition,
  ReplayMismatch,
  EndpointMismatch,
  NotConnected,
  InvalidWord,
  IllFormedMap,
  IllFormedLetter,
  UnknownTag,
  BadParams,
  SyntaxError,
};

std::string_view errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cpath
