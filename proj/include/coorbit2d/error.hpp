#pragma once

#include <stdexcept>
#include <string>

namespace coorbit2d {

enum class ErrorKind {
  invalid_matrix,
  family_mismatch,
  degenerate_input,
  out_of_range,
  parse,
  io,
  numeric,
};

/// Base exception for all library failures; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coorbit2d
