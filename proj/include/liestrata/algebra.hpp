#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liestrata/matrix.hpp"
#include "liestrata/subspace.hpp"

namespace liestrata {

/// Symmetric or skew bilinear form on g, stored as its Gram matrix in
/// the algebra basis.
struct BilinearForm {
  RatMatrix gram;
  bool symmetric = true;

  std::size_t dim() const { return gram.rows(); }
  Rat eval(const RatVec& a, const RatVec& b) const;
  bool is_nondegenerate() const { return gram.rank() == gram.rows(); }
  bool matches_declared_symmetry() const;
};

/// Finite-dimensional Lie algebra over exact rationals, given by
/// structure constants. The single source of truth for brackets:
/// everything downstream (Poisson tensors, stabilizers, sheets) reads
/// them from here.
class LieAlgebra {
 public:
  /// One bracket entry: [e_i, e_j] = sum coeffs[k] * e_k, for i < j.
  struct BracketEntry {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, Rat>> coeffs;
  };

  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, std::vector<std::string> labels,
             const std::vector<BracketEntry>& brackets);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structure constant c_{ij}^k (antisymmetric completion included).
  Rat c(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sparse [e_i, e_j] for i < j; empty vector means zero.
  const std::vector<std::pair<std::size_t, Rat>>& basis_bracket(std::size_t i,
                                                                std::size_t j) const;

  Vec bracket(const Vec& a, const Vec& b) const;
  bool jacobi_ok() const;

  /// Matrix of ad_a acting on g in the algebra basis.
  RatMatrix ad(const Vec& a) const;
  /// Matrix acting on covector coordinates: mu -> -ad_a^* mu,
  /// i.e. the generator of the coadjoint flow exp(t ad*_a).
  RatMatrix coadjoint_generator(const Vec& a) const;

  BilinearForm killing_form() const;

  Vec basis_vec(std::size_t i) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  // Sparse structure constants keyed by (i, j) with i < j.
  std::map<std::pair<std::size_t, std::size_t>,
           std::vector<std::pair<std::size_t, Rat>>>
      c_;
  static const std::vector<std::pair<std::size_t, Rat>> kEmpty;
};

/// {x : B(x, s) = 0 for all s in S}. With a nondegenerate form this is a
/// true complement (dim S + dim perp = n); a degenerate form is allowed
/// only when the caller passes allow_degenerate.
Subspace orthogonal_complement(const LieAlgebra& L, const Subspace& S,
                               const BilinearForm& B, bool allow_degenerate = false);

/// Covectors vanishing on S (S inside g); dim = n - dim S.
Subspace annihilator(const LieAlgebra& L, const Subspace& S);

/// Restricted structure constants of a subalgebra, with basis rows of S
/// as the new basis. Throws invariant_error naming a witness pair if S
/// is not closed under the bracket.
LieAlgebra subalgebra_structure(const LieAlgebra& L, const Subspace& S);

/// JSON schema I/O (the schema documented with this module):
/// {"dim": 4, "basis": [...], "brackets": [{"i":0,"j":1,"coeffs":{"1":"1"}}]}
LieAlgebra algebra_from_json(const std::string& json_text);
std::string algebra_to_json(const LieAlgebra& L);

}  // namespace liestrata
