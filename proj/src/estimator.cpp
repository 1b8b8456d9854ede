#include "liestrata/estimator.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

#include "liestrata/errors.hpp"
#include "liestrata/random.hpp"
#include "liestrata/stabilizer.hpp"

namespace liestrata {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// B(nu) as a dense float matrix.
MatrixXd poisson_float(const LieAlgebra& L, const VectorXd& nu) {
  const std::size_t n = L.dim();
  MatrixXd B = MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = 0.0;
      for (const auto& [k, c] : L.basis_bracket(i, j)) v += nu(k) * rat_double(c);
      B(i, j) = v;
      B(j, i) = -v;
    }
  return B;
}

/// Projection of a perturbed point onto {nu : rank B(nu) <= r} by
/// Gauss-Newton on the bordered system
///
///     B(x) V = 0,   N^T V = I_q        (q = n - r)
///
/// in the joint unknowns (x, V). Bordering with an explicit kernel frame
/// keeps the system regular even where the rank locus is cut out by
/// degenerate (non-reduced) minor equations, so Newton converges
/// quadratically instead of stalling at sqrt(machine eps).
class RankProjector {
 public:
  RankProjector(const LieAlgebra& L, std::size_t target_rank, const MatrixXd& reference_kernel,
                double step_scale)
      : L_(L), n_(L.dim()), q_(L.dim() - target_rank), N_(reference_kernel),
        step_scale_(step_scale) {
    directions_.assign(n_, MatrixXd::Zero(n_, n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (const auto& [k, c] : L_.basis_bracket(i, j)) {
          directions_[k](i, j) += rat_double(c);
          directions_[k](j, i) -= rat_double(c);
        }
  }

  std::size_t q() const { return q_; }

  /// Newton iterations from x0; returns true on convergence and leaves
  /// the converged point in x0.
  ///
  /// Two phases. First the x block of the Jacobian is scaled by the
  /// perturbation radius, so the minimum-norm step prefers tilting the
  /// kernel frame over moving the point: without that, degenerate
  /// singular pairs make Newton teleport to deeper strata far away.
  /// Once converged in that metric, a few unscaled polish steps land on
  /// the variety itself; this is what crushes coordinates the rank
  /// equations only see quadratically.
  bool project(VectorXd& x0, std::size_t max_iterations, double tol) const {
    if (q_ == 0) return true;  // no rank constraint active
    VectorXd x = x0;
    // Initial kernel frame: tail right-singular vectors, aligned to the
    // reference frame so N^T V ~ I.
    MatrixXd B = poisson_float(L_, x);
    Eigen::JacobiSVD<MatrixXd> svd(B, Eigen::ComputeFullU | Eigen::ComputeFullV);
    MatrixXd V = svd.matrixV().rightCols(q_);
    {
      Eigen::FullPivLU<MatrixXd> lu(N_.transpose() * V);
      if (!lu.isInvertible()) return false;
      V = V * lu.inverse();
    }

    // Gauss-Newton with geometric-tail extrapolation. Where the rank
    // equations are non-reduced, the minimum-norm step contracts the
    // off-set distance by a fixed ratio per iteration; once consecutive
    // increments are parallel with a stable ratio, adding the geometric
    // tail dx * rho/(1-rho) jumps to the limit. Transversal strata have
    // ratio ~ 0 and are unaffected.
    double best_fn = -1.0;
    VectorXd best_x = x;
    std::size_t since_improvement = 0;
    VectorXd prev_dx = VectorXd::Zero(n_);
    bool have_prev_dx = false;
    for (std::size_t it = 0; it < max_iterations; ++it) {
      const VectorXd x_before = x;
      VectorXd dx(n_);
      const double fn = newton_step(x, V, step_scale_, &dx);
      if (best_fn < 0.0 || fn < 0.5 * best_fn) {
        since_improvement = 0;
      } else if (++since_improvement > 8) {
        break;  // stalled at the attainable floor
      }
      if (best_fn < 0.0 || fn < best_fn) {
        best_fn = fn;
        best_x = x_before;
      }

      const double dn = dx.norm(), pn = prev_dx.norm();
      if (have_prev_dx && dn > 0.0 && pn > 0.0 && dn < 0.95 * pn &&
          dx.dot(prev_dx) > 0.9 * dn * pn) {
        const double rho = dn / pn;
        if (rho > 0.05) {
          x += dx * (rho / (1.0 - rho));
          have_prev_dx = false;
          continue;
        }
      }
      prev_dx = dx;
      have_prev_dx = true;
    }
    if (best_fn < 0.0 || best_fn > tol) return false;
    x0 = best_x;
    return true;
  }

 private:
  double residual_norm(const VectorXd& x, const MatrixXd& V) const {
    const MatrixXd B = poisson_float(L_, x);
    const MatrixXd BV = B * V;
    const MatrixXd norm_block = N_.transpose() * V - MatrixXd::Identity(q_, q_);
    return std::sqrt(BV.squaredNorm() + norm_block.squaredNorm());
  }

  /// One Gauss-Newton update of (x, V) with the given x-column scale;
  /// returns the residual norm before the step and optionally the
  /// applied base-point increment.
  double newton_step(VectorXd& x, MatrixXd& V, double scale, VectorXd* dx_out = nullptr) const {
    const std::size_t eqs = n_ * q_ + q_ * q_;
    const std::size_t vars = n_ + n_ * q_;
    const MatrixXd B = poisson_float(L_, x);
    const MatrixXd BV = B * V;
    const MatrixXd norm_block = N_.transpose() * V - MatrixXd::Identity(q_, q_);
    VectorXd F(eqs);
    for (std::size_t col = 0; col < q_; ++col)
      for (std::size_t row = 0; row < n_; ++row) F(col * n_ + row) = BV(row, col);
    for (std::size_t col = 0; col < q_; ++col)
      for (std::size_t row = 0; row < q_; ++row)
        F(n_ * q_ + col * q_ + row) = norm_block(row, col);
    const double fn = F.norm();

    MatrixXd J = MatrixXd::Zero(eqs, vars);
    for (std::size_t k = 0; k < n_; ++k) {
      const MatrixXd mkv = directions_[k] * V;
      for (std::size_t col = 0; col < q_; ++col)
        for (std::size_t row = 0; row < n_; ++row)
          J(col * n_ + row, k) = scale * mkv(row, col);
    }
    for (std::size_t col = 0; col < q_; ++col)
      for (std::size_t vrow = 0; vrow < n_; ++vrow) {
        const std::size_t var = n_ + col * n_ + vrow;
        for (std::size_t row = 0; row < n_; ++row) J(col * n_ + row, var) = B(row, vrow);
        for (std::size_t row = 0; row < q_; ++row)
          J(n_ * q_ + col * q_ + row, var) = N_(vrow, row);
      }
    Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(J);
    const VectorXd delta = cod.solve(-F);
    for (std::size_t k = 0; k < n_; ++k) x(k) += scale * delta(k);
    for (std::size_t col = 0; col < q_; ++col)
      for (std::size_t vrow = 0; vrow < n_; ++vrow)
        V(vrow, col) += delta(n_ + col * n_ + vrow);
    if (dx_out) *dx_out = scale * delta.head(n_);
    return fn;
  }

  const LieAlgebra& L_;
  std::size_t n_, q_;
  MatrixXd N_;
  double step_scale_ = 1.0;
  std::vector<MatrixXd> directions_;
};

}  // namespace

EstimateResult estimate_stratum_dim(const LieAlgebra& L, const Vec& mu,
                                    const EstimatorConfig& cfg) {
  if (mu.space != Space::Dual) throw input_error("estimator expects a covector");
  const std::size_t n = L.dim();

  // Exact rank and kernel at the basepoint anchor the float stage.
  const PoissonTensor base = poisson_tensor(L, mu);
  const std::size_t target_rank = base.matrix.rank();
  const RatMatrix exact_kernel = base.matrix.kernel();
  const std::size_t q = n - target_rank;

  MatrixXd N(n, q);
  for (std::size_t col = 0; col < q; ++col)
    for (std::size_t row = 0; row < n; ++row)
      N(row, col) = rat_double(exact_kernel.at(col, row));
  // Orthonormalize the reference frame.
  if (q > 0) {
    Eigen::HouseholderQR<MatrixXd> qr(N);
    N = qr.householderQ() * MatrixXd::Identity(n, q);
  }

  VectorXd mu_f(n);
  for (std::size_t i = 0; i < n; ++i) mu_f(i) = rat_double(mu.coords[i]);
  const double scale = std::max(1.0, poisson_float(L, mu_f).norm());
  const double tol_newton = 1e-12 * scale;

  const RankProjector projector(L, target_rank, N, cfg.radius);

  std::vector<VectorXd> cloud(cfg.samples);
  std::vector<char> ok(cfg.samples, 0);

  for_index(cfg.samples, cfg.policy, [&](std::size_t s) {
    SplitMix64 rng(derive_seed(cfg.seed, s));
    for (int attempt = 0; attempt <= cfg.retry_budget; ++attempt) {
      VectorXd x = mu_f;
      for (std::size_t i = 0; i < n; ++i)
        x(i) += cfg.radius * (2.0 * rng.next_unit() - 1.0);
      if (projector.project(x, cfg.max_iterations, tol_newton) &&
          (x - mu_f).norm() <= 20.0 * cfg.radius * std::sqrt(static_cast<double>(n))) {
        cloud[s] = x;
        ok[s] = 1;
        break;
      }
    }
  });

  EstimateResult res;
  for (std::size_t s = 0; s < cfg.samples; ++s) (ok[s] ? res.converged : res.failed)++;
  if (res.converged < std::max<std::size_t>(4, cfg.samples / 2))
    throw estimator_error("stratum dimension estimator: only " +
                          std::to_string(res.converged) + "/" +
                          std::to_string(cfg.samples) + " samples converged");

  MatrixXd rows(res.converged, n);
  VectorXd mean = VectorXd::Zero(n);
  std::size_t r = 0;
  for (std::size_t s = 0; s < cfg.samples; ++s)
    if (ok[s]) {
      rows.row(r++) = cloud[s].transpose();
      mean += cloud[s];
    }
  mean /= static_cast<double>(res.converged);
  for (std::size_t i = 0; i < res.converged; ++i) rows.row(i) -= mean.transpose();

  Eigen::JacobiSVD<MatrixXd> pca(rows);
  const auto& sv = pca.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  res.dim_estimate = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    res.singular_values.push_back(sv(i));
    if (top > 0.0 && sv(i) > cfg.tol * top) ++res.dim_estimate;
  }
  return res;
}

}  // namespace liestrata
