#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "liestrata/algebra.hpp"
#include "liestrata/random.hpp"

namespace liestrata {

/// Batch kernels run either serially (the reference implementation,
/// kept for testing) or OpenMP-parallel. Results are written to
/// index-addressed slots and every sample derives its own RNG stream,
/// so the two policies are bit-identical.
enum class ExecPolicy { Serial, Parallel };

void for_index(std::size_t count, ExecPolicy policy,
               const std::function<void(std::size_t)>& body);

Vec random_covector(const LieAlgebra& L, SplitMix64& rng, std::int64_t range = 1000000);

/// Corank of the Poisson tensor at `count` random covectors.
std::vector<std::size_t> corank_scan(const LieAlgebra& L, std::size_t count,
                                     std::uint64_t seed, ExecPolicy policy,
                                     std::int64_t range = 1000000);

/// dim [g_mu, g_mu] at `count` random covectors.
std::vector<std::size_t> derived_dim_scan(const LieAlgebra& L, std::size_t count,
                                          std::uint64_t seed, ExecPolicy policy);

}  // namespace liestrata
