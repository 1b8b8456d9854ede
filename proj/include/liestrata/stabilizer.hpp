#pragma once

#include <cstdint>
#include <optional>

#include "liestrata/algebra.hpp"
#include "liestrata/poly.hpp"

namespace liestrata {

/// Skew matrix B_ij = <mu, [e_i, e_j]>. Its kernel is the stabilizer,
/// its rank the orbit dimension.
struct PoissonTensor {
  Vec mu;
  RatMatrix matrix;
};

PoissonTensor poisson_tensor(const LieAlgebra& L, const Vec& mu);

/// g_mu = {a : ad*_a mu = 0}, computed as ker B(mu). Closure under the
/// bracket is verified before returning.
Subspace stabilizer(const LieAlgebra& L, const Vec& mu);

/// span{[s_i, s_j]} for a subalgebra S; rejects non-closed S with a
/// witness pair.
Subspace derived_subalgebra(const LieAlgebra& L, const Subspace& S);

/// {x in S : [x, S] = 0}.
Subspace center_of_subalgebra(const LieAlgebra& L, const Subspace& S);

enum class StabilizerType { Abelian, Aff1PlusAbelian, HeisenbergPlusAbelian, Other };
const char* stabilizer_type_name(StabilizerType t);

/// Trichotomy for stabilizers with dim derived <= 1: abelian, or a line
/// [x, z] = z (aff(1) factor), or a central derived line (Heisenberg
/// factor). OTHER when dim derived >= 2.
StabilizerType classify_stabilizer_type(const LieAlgebra& L, const Subspace& S);

struct StabilizerReport {
  Vec mu;
  Subspace stab;
  Subspace derived;
  Subspace center_of_stabilizer;
  std::size_t dim_stabilizer = 0;
  std::size_t dim_derived = 0;
  std::size_t orbit_dim = 0;
  StabilizerType type = StabilizerType::Abelian;
};

StabilizerReport analyze_point(const LieAlgebra& L, const Vec& mu);

/// Generic corank of B(x): exact corank at >= 3 independently sampled
/// rational points. All witnesses must agree; persistent disagreement
/// after widening the sample range is an error, never a guess.
std::size_t generic_corank(const LieAlgebra& L, std::uint64_t seed,
                           std::vector<std::pair<Vec, std::size_t>>* witnesses = nullptr);

/// Squarefree generator of the top-dimensional part of the singular set,
/// when that set is a hypersurface: squarefree part of the gcd of all
/// r x r minors of the symbolic tensor B(x), r = n - ind g. Returns
/// nullopt when the gcd is constant (codim >= 2) or B vanishes
/// identically.
std::optional<Poly> singular_polynomial(const LieAlgebra& L, std::size_t dim_bound = 8,
                                        std::uint64_t seed = 0);

}  // namespace liestrata
