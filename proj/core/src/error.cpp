#include "specfill/error.hpp"

namespace specfill {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::non_tileable_window: return "non-tileable-window";
    case ErrorCode::inconsistent_mask: return "inconsistent-mask";
    case ErrorCode::inconsistent_input: return "inconsistent-input";
    case ErrorCode::invalid_order: return "invalid-order";
    case ErrorCode::degenerate_signal: return "degenerate-signal";
    case ErrorCode::not_positive_definite: return "not-positive-definite";
    case ErrorCode::no_reliable_data: return "no-reliable-data";
    case ErrorCode::insufficient_context: return "insufficient-context";
    case ErrorCode::cannot_place_gaps: return "cannot-place-gaps";
    case ErrorCode::unsupported_format: return "unsupported-format";
    case ErrorCode::undefined_reference: return "undefined-reference";
    case ErrorCode::insufficient_data: return "insufficient-data";
    case ErrorCode::io_failure: return "io-failure";
  }
  return "unknown-error";
}

}  // namespace specfill
