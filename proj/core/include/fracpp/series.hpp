#pragma once

#include <stdexcept>
#include <string>

namespace fracpp {

/// Result of a truncated series evaluation.
struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double trunc_error_bound = 0.0;
};

/// Thrown when a requested value cannot be computed to a trustworthy
/// accuracy (catastrophic cancellation, truncation cap, precision cap).
/// Carries the best value obtained so far.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double best_value)
      : std::runtime_error(what), best_(best_value) {}
  double best_value() const noexcept { return best_; }

 private:
  double best_;
};

}  // namespace fracpp
