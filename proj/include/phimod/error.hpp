#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phimod {

enum class ErrorKind {
  InvalidArgument,
  InvariantViolation,
  Parse,
  NoNonzeroSolution,
  IneligiblePosition,
  ShapeViolation,
  DegenerateInput,
  StructuralMismatch,
  TargetUnreachable,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` says which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace phimod
