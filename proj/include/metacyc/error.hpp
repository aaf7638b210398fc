#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metacyc {

enum class ErrorKind {
  InvalidArgument,
  NotAUnit,
  Overflow,
  CapExceeded,
  TwistOrderMismatch,  // r^M != 1 (mod n)
  FoldNotCentral,      // E(r-1) != 0 (mod n)
  NotSplit,
  AbelianUnsupported,  // operation needs r != 1
  ForeignElement,
  NotAdmissible,
  NotPrimePower,
  NotSubgroup,
  NotClosed,
  ConstraintViolation,
  CyclicMaximalSubgroup,
  CenterNotCyclic,
  CenterCyclic,
  OutsideFormulaDomain,
  NotTwoPower,
  NotFaithful,
  PreconditionFailed,
  TheoremViolation,  // an internal check contradicts a proven statement
  UnknownSuite,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and used by the
/// CLI and tests; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace metacyc
