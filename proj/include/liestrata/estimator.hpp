#pragma once

#include <cstdint>
#include <vector>

#include "liestrata/algebra.hpp"
#include "liestrata/batch.hpp"

namespace liestrata {

/// The one deliberately floating-point corner of the artifact: a local
/// dimension estimate for strata without closed-form dimensions.
struct EstimatorConfig {
  double radius = 1e-3;
  double tol = 1e-6;          // relative singular-value cutoff for the PCA
  std::size_t samples = 64;
  int retry_budget = 5;
  std::size_t max_iterations = 400;
  std::uint64_t seed = 0;
  ExecPolicy policy = ExecPolicy::Parallel;
};

struct EstimateResult {
  int dim_estimate = 0;
  std::vector<double> singular_values;  // PCA spectrum of the converged cloud
  std::size_t converged = 0;
  std::size_t failed = 0;
};

/// Projects random perturbations of mu onto the rank-condition set
/// {nu : rank B(nu) <= rank B(mu)} by alternating rank-r truncation of
/// B with a linear least-squares refit of nu, then runs a local PCA on
/// the converged cloud. dim_estimate counts singular values above
/// tol * largest.
EstimateResult estimate_stratum_dim(const LieAlgebra& L, const Vec& mu,
                                    const EstimatorConfig& cfg);

}  // namespace liestrata
