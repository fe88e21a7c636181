#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyp {

enum class ErrorKind {
  UnsupportedFamily,
  DimensionMismatch,
  IndexOutOfRange,
  NotDominant,
  EmptyInput,
  DegeneratePolytope,
  DegenerateSimplex,
  ArityMismatch,
  DegreeCap,
  NotPrime,
  SizeGuard,
  InvalidRep,
  NotEnumerable,
  NotUnivariateTorus,
  Validation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI serializes; the message is free-form.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hyp
