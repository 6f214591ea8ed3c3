#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ifslab {

enum class ErrorKind {
  invalid_argument,
  parse_error,
  invalid_series,
  invalid_window,
  unknown_landmark,
  bad_indices,
  io_error,
  no_convergence,
  derivative_vanished,
  pole_at_unity,
  zeros_in_period,
  level_too_deep,
  invalid_lambda,
  not_a_root,
  enumeration_too_large,
};

std::string_view to_string(ErrorKind kind);

// Usage/parse problems are the caller's fault; everything else is numeric.
bool is_usage_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ifslab
