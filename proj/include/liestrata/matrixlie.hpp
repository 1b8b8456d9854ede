#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liestrata/algebra.hpp"
#include "liestrata/batch.hpp"
#include "liestrata/matrix.hpp"
#include "liestrata/subspace.hpp"

namespace liestrata {

/// Exact solver for M x = b, factored once and reused.
class LinearSolver {
 public:
  explicit LinearSolver(const RatMatrix& M);
  std::optional<RatVec> solve(const RatVec& rhs) const;

 private:
  RatMatrix red_;   // RREF of M
  RatMatrix ops_;   // row operations: ops_ * M = red_
  std::vector<std::size_t> pivots_;
  std::size_t cols_ = 0;
};

enum class RealizationKind { GL, SL, SO, SP, SU, Other };

/// A Lie algebra of matrices: the abstract structure constants plus the
/// basis matrices realizing them, the coordinate maps between the two
/// pictures, and the trace form tr(ab). The trace form is how the
/// adjoint and coadjoint pictures are glued together.
class MatrixRealization {
 public:
  static MatrixRealization from_basis(std::string name, RealizationKind kind,
                                      std::vector<RatMatrix> basis);

  const std::string& name() const { return name_; }
  RealizationKind kind() const { return kind_; }
  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t matrix_size() const { return msize_; }
  const std::vector<RatMatrix>& basis() const { return basis_; }

  RatMatrix embed(const RatVec& coords) const;
  /// Coordinates of m in the basis, or nullopt if m is outside the
  /// algebra (e.g. nonzero trace for sl).
  std::optional<RatVec> coords_of_matrix(const RatMatrix& m) const;

  const BilinearForm& trace_form() const { return trace_form_; }

  /// mu_a = tr(m B_a): the covector corresponding to a matrix.
  Vec covector_of_matrix(const RatMatrix& m) const;
  /// Inverse of the identification; requires a nondegenerate trace form.
  RatMatrix matrix_of_covector(const Vec& mu) const;

  /// Flattened (row-major) span of the basis matrices inside k^(msize^2).
  const Subspace& flat_span() const { return flat_span_; }

 private:
  std::string name_;
  RealizationKind kind_ = RealizationKind::Other;
  std::size_t msize_ = 0;
  std::vector<RatMatrix> basis_;
  LieAlgebra algebra_;
  BilinearForm trace_form_;
  Subspace flat_span_;
  std::optional<LinearSolver> coord_solver_;
};

RatVec flatten_matrix(const RatMatrix& m);
RatMatrix unflatten_matrix(const RatVec& v, std::size_t n);

/// Multiset {eigenvalue -> partition of its generalized eigenspace}.
/// h(lambda) is the first (largest) part of lambda's partition.
struct JordanType {
  struct EigenBlock {
    Rat eigenvalue;
    std::vector<int> partition;  // weakly decreasing
  };
  std::vector<EigenBlock> blocks;  // sorted by eigenvalue

  std::size_t matrix_size() const;
  long h_sum() const;  // sum over eigenvalues of the largest block size
  Rat trace() const;
  bool is_semisimple() const;
  std::string str() const;
};

/// Exact Jordan type from rank sequences rank(M - lambda)^k. Requires
/// the characteristic polynomial to split over Q; throws input_error
/// otherwise.
JordanType jordan_type(const RatMatrix& M);

/// gl-centralizer dimension sum_lambda sum_{i,j} min(d_i, d_j); for sl
/// subtract one.
std::size_t centralizer_dim_from_type(const JordanType& t, bool sl = false);

/// dim O(mu) + (sum h(lambda)) - 1 inside sl(n).
long sheet_dim_sl(const JordanType& t, std::size_t n);

/// The canonical Jordan matrix of a type (upper blocks, eigenvalues in
/// sorted order, block sizes descending).
RatMatrix jordan_matrix_of_type(const JordanType& t);

struct JordanReduction {
  JordanType type;
  RatMatrix P;     // M = P * J * P^{-1}
  RatMatrix Pinv;
};
JordanReduction jordan_reduce(const RatMatrix& M);

/// Centralizer of mu inside the realized algebra, in abstract
/// coordinates: ker(ad_mu).
Subspace centralizer(const MatrixRealization& R, const RatMatrix& mu);

/// The one-eigenvalue deformation family: each Jordan block of size k
/// for eigenvalue lambda gains diag(eps_1(lambda), ..., eps_k(lambda)),
/// the eps sequence shared across blocks of the same eigenvalue; one
/// parameter is removed by the trace-zero constraint.
struct DeformationFamily {
  RatMatrix basepoint;
  std::vector<RatMatrix> directions;  // traceless, linearly independent
  std::size_t parameter_count() const { return directions.size(); }
};

DeformationFamily deformation_family(const MatrixRealization& R, const RatMatrix& mu,
                                     std::uint64_t seed = 0);

/// Tangent space of the sheet through mu for gl/sl realizations with
/// rational spectrum: orbit directions [g, mu] plus the first-order
/// moves of the invariant-factor slice (nested divisor chains of
/// companion blocks, per eigenvalue). The result's dimension is checked
/// against the closed form; a mismatch is an invariant violation.
Subspace sheet_tangent_sl(const MatrixRealization& R, const RatMatrix& mu);

/// Tangent at a semisimple point of any realization with nondegenerate
/// trace form: [g, mu] + center of the centralizer. Semisimplicity is
/// verified via a squarefree minimal polynomial.
Subspace sheet_tangent_semisimple(const MatrixRealization& R, const RatMatrix& mu);

struct SheetReport {
  RatVec mu_coords;            // abstract coordinates of mu
  Subspace tangent;            // T_mu S
  Subspace orbit_tangent;      // [g, mu]
  Subspace derived;            // [g^mu, g^mu]
  Subspace tangent_perp;       // (T_mu S)^perp under the trace form
  bool orthogonal = false;     // <derived, tangent> = 0
  bool eq_subspace = false;    // derived == perp   (statement a)
  bool eq_codim = false;       // dim derived == codim S  (statement b)
  bool eq_family = false;      // dim g^mu - dim derived == dim S - dim O  (statement c)
  bool statements_agree = false;
  std::size_t dim_centralizer = 0, dim_derived = 0, dim_orbit = 0, dim_sheet = 0;
};

/// Tests equality (sheetEq) of the derived centralizer with the trace
/// perp of the supplied tangent, plus the equivalent dimension
/// statements. The tangent must contain the orbit tangent.
SheetReport check_sheet_eq(const MatrixRealization& R, const RatMatrix& mu,
                           const Subspace& tangent);

struct NilpotentRow {
  std::vector<int> partition;
  std::size_t dim_centralizer = 0;
  std::size_t dim_derived = 0;
  int largest_part = 0;
  bool identity_holds = false;
};

/// For every partition of m: the nilpotent nu in gl(m) and the exact
/// difference dim g^nu - dim [g^nu, g^nu], which must equal the largest
/// part.
std::vector<NilpotentRow> nilpotent_block_identity(std::size_t m,
                                                   ExecPolicy policy = ExecPolicy::Parallel);

std::vector<std::vector<int>> partitions_of(int m);

/// Every Jordan type of sl(n): all multisets of eigenvalue partitions
/// with distinct rational eigenvalues chosen so the trace vanishes.
std::vector<JordanType> sl_jordan_types(std::size_t n);

/// Catalog constructors for the classical realizations.
MatrixRealization make_gl(std::size_t n);
MatrixRealization make_sl(std::size_t n);
MatrixRealization make_so(std::size_t n);
MatrixRealization make_sp(std::size_t n);  // sp(2n), matrices of size 2n
MatrixRealization make_su(std::size_t n);  // realized as real 2n x 2n matrices

}  // namespace liestrata
