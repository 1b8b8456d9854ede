#pragma once

#include <optional>
#include <vector>

#include "liestrata/matrix.hpp"

namespace liestrata {

/// Which side of the duality a vector or subspace lives on.
enum class Space { Alg, Dual };

const char* space_name(Space s);

/// A point of g (Space::Alg) or g* (Space::Dual) in basis coordinates.
struct Vec {
  Space space = Space::Alg;
  RatVec coords;

  Vec() = default;
  Vec(Space s, RatVec c) : space(s), coords(std::move(c)) {}
  std::size_t dim() const { return coords.size(); }
  bool is_zero() const { return vec_is_zero(coords); }
  bool operator==(const Vec&) const = default;
};

/// Linear subspace stored as a reduced-row-echelon basis with zero rows
/// dropped. Echelon form is the canonical representative, so equality
/// of subspaces is plain comparison of the stored matrices.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(Space tag, std::size_t parent_dim,
                       const std::vector<RatVec>& generators);
  static Subspace span_vecs(Space tag, std::size_t parent_dim,
                            const std::vector<Vec>& generators);
  static Subspace zero(Space tag, std::size_t parent_dim);
  static Subspace full(Space tag, std::size_t parent_dim);
  /// Wraps a matrix already known to be in reduced echelon form with no
  /// zero rows (e.g. output of RatMatrix::kernel).
  static Subspace from_echelon(Space tag, std::size_t parent_dim, RatMatrix m);

  Space tag() const { return tag_; }
  std::size_t parent_dim() const { return parent_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  RatVec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains_subspace(const Subspace& other) const;

  /// Coordinates of v in this basis, or nullopt if v is outside.
  std::optional<RatVec> coords_of(const Vec& v) const;

  bool operator==(const Subspace& o) const = default;

 private:
  Space tag_ = Space::Alg;
  std::size_t parent_dim_ = 0;
  RatMatrix basis_;  // dim x parent_dim, RREF, no zero rows
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace liestrata
