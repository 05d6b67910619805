#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rtl {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  ImproperColouring,
  InvalidVertex,
  ParseError,
  BoundExceeded,
  InvalidParam,
  InvalidCycle,
  BudgetExceeded,
  InsufficientPoints,
  OutOfTheoremRange,
  NoPrimitiveElement,
  IoError,
};

std::string_view error_name(ErrorKind kind);

// Every failure raised by the library. `name()` is the stable identifier the
// CLI and the Python bindings report.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace rtl
