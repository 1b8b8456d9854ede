#include "liestrata/batch.hpp"

#include <exception>
#include <mutex>

#include "liestrata/stabilizer.hpp"

namespace liestrata {

void for_index(std::size_t count, ExecPolicy policy,
               const std::function<void(std::size_t)>& body) {
  std::exception_ptr first_error = nullptr;
  std::mutex error_mutex;
  auto guarded = [&](std::size_t i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(count); ++i)
      guarded(static_cast<std::size_t>(i));
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < count; ++i) guarded(i);
  if (first_error) std::rethrow_exception(first_error);
}

Vec random_covector(const LieAlgebra& L, SplitMix64& rng, std::int64_t range) {
  RatVec coords(L.dim());
  for (auto& c : coords) c = rng.next_rat(range);
  return Vec(Space::Dual, std::move(coords));
}

std::vector<std::size_t> corank_scan(const LieAlgebra& L, std::size_t count,
                                     std::uint64_t seed, ExecPolicy policy,
                                     std::int64_t range) {
  std::vector<std::size_t> out(count, 0);
  for_index(count, policy, [&](std::size_t i) {
    SplitMix64 rng(derive_seed(seed, i));
    const Vec mu = random_covector(L, rng, range);
    out[i] = L.dim() - poisson_tensor(L, mu).matrix.rank();
  });
  return out;
}

std::vector<std::size_t> derived_dim_scan(const LieAlgebra& L, std::size_t count,
                                          std::uint64_t seed, ExecPolicy policy) {
  std::vector<std::size_t> out(count, 0);
  for_index(count, policy, [&](std::size_t i) {
    SplitMix64 rng(derive_seed(seed, i));
    const Vec mu = random_covector(L, rng);
    out[i] = derived_subalgebra(L, stabilizer(L, mu)).dim();
  });
  return out;
}

}  // namespace liestrata
