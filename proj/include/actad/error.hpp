#pragma once

#include <stdexcept>
#include <string>

namespace actad {

enum class ErrorKind {
  ParseError,
  RangeViolation,
  MatchViolation,
  OrderViolation,
  LevelMismatch,
  NotComposable,
  InvalidSequence,
  NotImplementedLevel,
  DegreeMismatch,
  SizeBound,
  NotBinary,
  Overflow,
  OutOfRange,
  Gamma0Overflow,
};

const char* error_name(ErrorKind kind);

// Domain error; what() is "<Variant>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace actad
