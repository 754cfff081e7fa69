#pragma once

#include <stdexcept>
#include <string>

namespace revchain {

enum class ErrorCode {
  row_not_stochastic,
  negative_entry,
  initial_not_distribution,
  dimension_mismatch,
  insufficient_steps,
  step_out_of_range,
  too_large,
  shape_mismatch,
  impossible_observation,
  no_accepted_samples,
  undefined_row_reached,
  parse_error,
  validation_error,
  cluster_out_of_range,
  empty_cluster,
};

// Exception carrying a machine-readable code plus up to three integer context
// fields (step/row/column). Step indices are 0-based; state indices follow the
// external 1-based convention.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, long a = -1, long b = -1,
        long c = -1)
      : std::runtime_error(message), code_(code), ctx_{a, b, c} {}

  ErrorCode code() const noexcept { return code_; }
  long context(int slot) const noexcept {
    return (slot >= 0 && slot < 3) ? ctx_[slot] : -1;
  }

 private:
  ErrorCode code_;
  long ctx_[3];
};

}  // namespace revchain
