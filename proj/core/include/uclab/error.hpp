#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uclab {

enum class ErrorKind {
  EmptyGenerators,
  CapExceeded,
  PreconditionFailed,
  ParseError,
  ElementOutOfRange,
  NoNonemptySet,
  DegenerateFamily,
  UnknownName,
  BadN,
  InvalidParams,
  BadM,
  Infeasible,
  TooFewRecords,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind lets front ends map errors
/// onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace uclab
