#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hzeta {

/// Failure categories raised by the library. The CLI reports these by name.
enum class ErrorKind {
  domain,
  overflow,
  pole,
  non_convergence,
  nan_integrand,
  slow_convergence,
  bracket_failure,
  no_interior_sign_change,
  converged_to_trivial_root,
  insufficient_roots,
  ordering_violation,
  incomplete_enumeration,
  out_of_range,
  degree_overflow,
  cross_check_mismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hzeta
