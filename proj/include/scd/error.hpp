#pragma once

#include <stdexcept>
#include <string>

namespace scd {

enum class ErrorKind {
  invalid_field,
  field_mismatch,
  division_by_zero,
  invalid_partition,
  unsupported_family,
  membership,
  budget_exceeded,
  malformed_input,
  context_mismatch,
  mixed_basis,
};


/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can emit a structured error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_field: return "invalid_field";
    case ErrorKind::field_mismatch: return "field_mismatch";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::invalid_partition: return "invalid_partition";
    case ErrorKind::unsupported_family: return "unsupported_family";
    case ErrorKind::membership: return "membership";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::malformed_input: return "malformed_input";
    case ErrorKind::context_mismatch: return "context_mismatch";
    case ErrorKind::mixed_basis: return "mixed_basis";
  }
  return "unknown";
}

}  // namespace scd
