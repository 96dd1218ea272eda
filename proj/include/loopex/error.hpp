#pragma once

#include <stdexcept>
#include <string>

namespace loopex {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  variable_mismatch,
  parameter_mismatch,
  precondition,
  not_exact,
  overflow,
  schema,
  unknown_knot,
  io,
  internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace loopex
