#include "mirahoric/error.hpp"

namespace mirahoric {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::NotPrime: return "not_prime";
    case ErrorKind::NotInvertible: return "not_invertible";
    case ErrorKind::NegativeValuation: return "negative_valuation";
    case ErrorKind::FieldMismatch: return "field_mismatch";
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::NoHalfPowers: return "no_half_powers";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::FieldExtensionRequired: return "requires_field_extension";
    case ErrorKind::NonCommuting: return "non_commuting";
    case ErrorKind::IndexNotInvertible: return "index_not_invertible";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

}  // namespace mirahoric
