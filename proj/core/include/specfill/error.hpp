#pragma once

#include <stdexcept>
#include <string>

namespace specfill {

enum class ErrorCode {
  invalid_parameter,
  non_tileable_window,
  inconsistent_mask,
  inconsistent_input,
  invalid_order,
  degenerate_signal,
  not_positive_definite,
  no_reliable_data,
  insufficient_context,
  cannot_place_gaps,
  unsupported_format,
  undefined_reference,
  insufficient_data,
  io_failure,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace specfill
