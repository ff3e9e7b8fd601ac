#ifndef MIRAHORIC_ERROR_HPP
#define MIRAHORIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mirahoric {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  NotInvertible,
  NegativeValuation,
  FieldMismatch,
  DivisionByZero,
  NoHalfPowers,
  BudgetExceeded,
  FieldExtensionRequired,
  NonCommuting,
  IndexNotInvertible,
};

// Stable identifier used in machine-readable error objects.
const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mirahoric

#endif  // MIRAHORIC_ERROR_HPP
