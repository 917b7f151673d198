#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weylshape {

enum class ErrorCode {
  NonDivisible,
  UndefinedGcd,
  ZeroPolynomial,
  DivisionByZero,
  NotDivisible,
  InvalidElement,
  ParseError,
  ZeroElement,
  InvalidDirection,
  ForbiddenDirection,
  DiagonalPoint,
  NonPositiveRho,
  IdentityViolation,
  PreconditionViolated,
  ZeroAtOrigin,
  DirectionMismatch,
  UnknownFormat,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::ParseError, "at byte " + std::to_string(offset) + ": " + message),
        offset_(offset),
        message_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

}  // namespace weylshape
