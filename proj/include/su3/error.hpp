#pragma once

#include <stdexcept>
#include <string>

namespace su3 {

enum class ErrorCode {
  invalid_argument,
  singular_input,
  resource_guard,
  non_convergence,
  io_failure,
  invariant_violation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace su3
