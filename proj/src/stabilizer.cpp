#include "liestrata/stabilizer.hpp"

#include <algorithm>

#include "liestrata/errors.hpp"
#include "liestrata/random.hpp"

namespace liestrata {

PoissonTensor poisson_tensor(const LieAlgebra& L, const Vec& mu) {
  if (mu.space != Space::Dual) throw input_error("poisson tensor expects a covector");
  if (mu.dim() != L.dim()) throw input_error("covector dimension mismatch");
  const std::size_t n = L.dim();
  RatMatrix B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v(0);
      for (const auto& [k, c] : L.basis_bracket(i, j))
        if (mu.coords[k] != 0) v += mu.coords[k] * c;
      if (v != 0) {
        B.at(i, j) = v;
        B.at(j, i) = -v;
      }
    }
  return PoissonTensor{mu, std::move(B)};
}

Subspace stabilizer(const LieAlgebra& L, const Vec& mu) {
  const PoissonTensor B = poisson_tensor(L, mu);
  Subspace S = Subspace::from_echelon(Space::Alg, L.dim(), B.matrix.kernel());
  // The kernel of B(mu) is a subalgebra; a violation here means the
  // structure constants are inconsistent.
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t b = a + 1; b < S.dim(); ++b) {
      Vec br = L.bracket(Vec(Space::Alg, S.basis_row(a)), Vec(Space::Alg, S.basis_row(b)));
      if (!S.contains(br))
        throw invariant_error("stabilizer is not closed under the bracket");
    }
  return S;
}

Subspace derived_subalgebra(const LieAlgebra& L, const Subspace& S) {
  if (S.tag() != Space::Alg) throw input_error("derived algebra expects a subspace of g");
  const std::size_t r = S.dim();
  std::vector<RatVec> gens;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      Vec br = L.bracket(Vec(Space::Alg, S.basis_row(a)), Vec(Space::Alg, S.basis_row(b)));
      if (!S.contains(br))
        throw invariant_error(
            "not a subalgebra: bracket of basis rows (" + std::to_string(a) + ", " +
            std::to_string(b) + ") leaves the subspace");
      if (!br.is_zero()) gens.push_back(std::move(br.coords));
    }
  return Subspace::span(Space::Alg, L.dim(), gens);
}

Subspace center_of_subalgebra(const LieAlgebra& L, const Subspace& S) {
  if (S.tag() != Space::Alg) throw input_error("center expects a subspace of g");
  const std::size_t r = S.dim();
  if (r == 0) return S;
  // x = sum u_a s_a with [x, s_b] = 0 for all b: a linear system on u.
  std::vector<Vec> srows;
  for (std::size_t a = 0; a < r; ++a) srows.emplace_back(Space::Alg, S.basis_row(a));
  // Validate closure as part of the subalgebra contract.
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (!S.contains(L.bracket(srows[a], srows[b])))
        throw invariant_error("center: input is not a subalgebra");
  RatMatrix sys(r * L.dim(), r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      Vec br = L.bracket(srows[a], srows[b]);
      for (std::size_t k = 0; k < L.dim(); ++k) sys.at(b * L.dim() + k, a) = br.coords[k];
    }
  RatMatrix null = sys.kernel();
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < null.rows(); ++i) {
    RatVec x(L.dim(), Rat(0));
    for (std::size_t a = 0; a < r; ++a) {
      const Rat& u = null.at(i, a);
      if (u == 0) continue;
      for (std::size_t k = 0; k < L.dim(); ++k) x[k] += u * srows[a].coords[k];
    }
    gens.push_back(std::move(x));
  }
  return Subspace::span(Space::Alg, L.dim(), gens);
}

const char* stabilizer_type_name(StabilizerType t) {
  switch (t) {
    case StabilizerType::Abelian: return "ABELIAN";
    case StabilizerType::Aff1PlusAbelian: return "AFF1_PLUS_ABELIAN";
    case StabilizerType::HeisenbergPlusAbelian: return "HEISENBERG_PLUS_ABELIAN";
    case StabilizerType::Other: return "OTHER";
  }
  return "OTHER";
}

StabilizerType classify_stabilizer_type(const LieAlgebra& L, const Subspace& S) {
  const Subspace derived = derived_subalgebra(L, S);
  if (derived.dim() == 0) return StabilizerType::Abelian;
  if (derived.dim() >= 2) return StabilizerType::Other;
  // One-dimensional derived line spanned by z: central z means a
  // Heisenberg factor, otherwise some x acts on z with a nonzero
  // eigenvalue and we get the aff(1) factor.
  const Vec z(Space::Alg, derived.basis_row(0));
  for (std::size_t a = 0; a < S.dim(); ++a) {
    Vec br = L.bracket(Vec(Space::Alg, S.basis_row(a)), z);
    if (!br.is_zero()) return StabilizerType::Aff1PlusAbelian;
  }
  return StabilizerType::HeisenbergPlusAbelian;
}

StabilizerReport analyze_point(const LieAlgebra& L, const Vec& mu) {
  StabilizerReport rep;
  rep.mu = mu;
  const PoissonTensor B = poisson_tensor(L, mu);
  rep.stab = stabilizer(L, mu);
  rep.derived = derived_subalgebra(L, rep.stab);
  rep.center_of_stabilizer = center_of_subalgebra(L, rep.stab);
  rep.dim_stabilizer = rep.stab.dim();
  rep.dim_derived = rep.derived.dim();
  rep.orbit_dim = B.matrix.rank();
  rep.type = classify_stabilizer_type(L, rep.stab);
  if (rep.orbit_dim % 2 != 0)
    throw invariant_error("odd orbit dimension (skew rank must be even)");
  if (rep.orbit_dim + rep.dim_stabilizer != L.dim())
    throw invariant_error("rank-nullity mismatch in point analysis");
  if (!rep.stab.contains_subspace(rep.derived))
    throw invariant_error("derived algebra escapes the stabilizer");
  return rep;
}

std::size_t generic_corank(const LieAlgebra& L, std::uint64_t seed,
                           std::vector<std::pair<Vec, std::size_t>>* witnesses) {
  std::int64_t range = 1000000;
  for (int round = 0; round < 4; ++round) {
    std::vector<std::pair<Vec, std::size_t>> found;
    for (std::size_t s = 0; s < 3; ++s) {
      SplitMix64 rng(derive_seed(seed, (round * 31) + s));
      RatVec coords(L.dim());
      for (auto& c : coords) c = rng.next_rat(range);
      Vec mu(Space::Dual, std::move(coords));
      const std::size_t corank = L.dim() - poisson_tensor(L, mu).matrix.rank();
      found.emplace_back(std::move(mu), corank);
    }
    const std::size_t first = found[0].second;
    if (std::all_of(found.begin(), found.end(),
                    [&](const auto& w) { return w.second == first; })) {
      if (witnesses) *witnesses = std::move(found);
      return first;
    }
    range *= 100;  // widen and retry; agreement failure is never resolved silently
  }
  throw invariant_error("generic corank witnesses keep disagreeing");
}

std::optional<Poly> singular_polynomial(const LieAlgebra& L, std::size_t dim_bound,
                                        std::uint64_t seed) {
  const std::size_t n = L.dim();
  if (n > dim_bound)
    throw input_error("singular polynomial: dimension " + std::to_string(n) +
                      " exceeds bound " + std::to_string(dim_bound));
  const std::size_t ind = generic_corank(L, seed);
  const std::size_t r = n - ind;
  if (r == 0) return std::nullopt;  // abelian: B vanishes identically, no rank drop

  std::vector<std::vector<Poly>> B(n, std::vector<Poly>(n, Poly(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly entry(n);
      for (const auto& [k, c] : L.basis_bracket(i, j))
        entry = entry + Poly::var(n, k).scaled(c);
      B[i][j] = entry;
      B[j][i] = entry.negated();
    }

  // gcd over all r x r minors, streamed with early exit once constant.
  std::vector<std::size_t> row_sel(r), col_sel(r);
  for (std::size_t i = 0; i < r; ++i) row_sel[i] = i;
  Poly g(n);
  bool any_nonzero = false;

  auto next_subset = [&](std::vector<std::size_t>& sel) {
    std::size_t i = r;
    while (i-- > 0) {
      if (sel[i] + (r - i) < n) {
        ++sel[i];
        for (std::size_t j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  bool rows_left = true;
  while (rows_left) {
    for (std::size_t i = 0; i < r; ++i) col_sel[i] = i;
    bool cols_left = true;
    while (cols_left) {
      std::vector<std::vector<Poly>> sub(r, std::vector<Poly>(r, Poly(n)));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub[i][j] = B[row_sel[i]][col_sel[j]];
      Poly minor = Poly::det(std::move(sub));
      if (!minor.is_zero()) {
        any_nonzero = true;
        g = g.is_zero() ? minor.primitive_normalized() : poly_gcd(g, minor);
        if (g.is_constant()) return std::nullopt;
      }
      cols_left = next_subset(col_sel);
    }
    rows_left = next_subset(row_sel);
  }
  if (!any_nonzero)
    throw invariant_error("all generic-rank minors vanish identically");
  return g.squarefree_part();
}

}  // namespace liestrata
