#pragma once

#include <stdexcept>
#include <string>

namespace liestrata {

/// Bad user-supplied data: malformed scalars, dimension mismatches,
/// invalid catalog parameters. CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal consistency check failed (a computation produced something
/// that a theorem says cannot happen). CLI exit code 3.
struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The floating-point stratum-dimension estimator ran out of retries.
/// CLI exit code 4.
struct estimator_error : std::runtime_error {
  explicit estimator_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A curve handed to the tangency checker left its stratum at one of the
/// sampled parameter values, so the hypothesis of the statement being
/// verified does not hold. Carries the offending sample.
struct stratum_exit_error : input_error {
  std::string sample;
  stratum_exit_error(const std::string& sample_value, const std::string& msg)
      : input_error(msg), sample(sample_value) {}
};

}  // namespace liestrata
