#pragma once

#include <stdexcept>
#include <string>

namespace compdnf {

enum class ErrorKind {
  width_mismatch,
  invalid_argument,
  constant_column,
  not_reduced,
  not_complete,
  missing_unit,
  bad_lambda,
  no_partition,
  overflow,
  guard_exceeded,
  parse_error,
  unsupported,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception type for all library failures; kind() identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace compdnf
