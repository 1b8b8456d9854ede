#include "liestrata/matrixlie.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liestrata/errors.hpp"
#include "liestrata/random.hpp"
#include "liestrata/stabilizer.hpp"

namespace liestrata {

// ---------------------------------------------------------------- solver

LinearSolver::LinearSolver(const RatMatrix& M) : cols_(M.cols()) {
  const std::size_t r = M.rows();
  RatMatrix aug(r, cols_ + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  const auto pivots = aug.rref();
  red_ = RatMatrix(r, cols_);
  ops_ = RatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) red_.at(i, j) = aug.at(i, j);
    for (std::size_t j = 0; j < r; ++j) ops_.at(i, j) = aug.at(i, cols_ + j);
  }
  for (auto p : pivots)
    if (p < cols_) pivots_.push_back(p);
}

std::optional<RatVec> LinearSolver::solve(const RatVec& rhs) const {
  if (rhs.size() != red_.rows()) throw input_error("solver rhs size mismatch");
  const RatVec y = ops_.apply(rhs);
  RatVec x(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = y[r];
  // Consistency: rows beyond the pivot rows must have zero transformed rhs,
  // and pivot rows may involve free columns (which we set to zero).
  for (std::size_t r = pivots_.size(); r < red_.rows(); ++r)
    if (y[r] != 0) return std::nullopt;
  // Verify in case free columns interact (they cannot, with free vars 0,
  // but rows of red_ with entries beyond the pivot must be honored).
  RatVec check(red_.rows(), Rat(0));
  for (std::size_t r = 0; r < red_.rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (red_.at(r, c) != 0 && x[c] != 0) check[r] += red_.at(r, c) * x[c];
  for (std::size_t r = 0; r < red_.rows(); ++r)
    if (check[r] != y[r]) return std::nullopt;
  return x;
}

// ------------------------------------------------------------- realization

RatVec flatten_matrix(const RatMatrix& m) {
  RatVec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

RatMatrix unflatten_matrix(const RatVec& v, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

namespace {

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

std::optional<RatMatrix> rat_inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = aug.rref();
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace

MatrixRealization MatrixRealization::from_basis(std::string name, RealizationKind kind,
                                                std::vector<RatMatrix> basis) {
  if (basis.empty()) throw input_error("realization needs a nonempty basis");
  MatrixRealization R;
  R.name_ = std::move(name);
  R.kind_ = kind;
  R.msize_ = basis[0].rows();
  R.basis_ = std::move(basis);
  const std::size_t n = R.basis_.size();
  const std::size_t f = R.msize_ * R.msize_;

  std::vector<RatVec> flat_rows;
  for (const auto& b : R.basis_) {
    if (b.rows() != R.msize_ || b.cols() != R.msize_)
      throw input_error("realization basis matrices must share one size");
    flat_rows.push_back(flatten_matrix(b));
  }
  R.flat_span_ = Subspace::span(Space::Alg, f, flat_rows);
  if (R.flat_span_.dim() != n)
    throw input_error("realization basis matrices are linearly dependent");

  // Coordinate solver: columns are the flattened basis matrices.
  RatMatrix M(f, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < f; ++k) M.at(k, a) = flat_rows[a][k];
  R.coord_solver_.emplace(M);

  // Structure constants from commutators of basis matrices.
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RatMatrix c = commutator(R.basis_[i], R.basis_[j]);
      auto coords = R.coord_solver_->solve(flatten_matrix(c));
      if (!coords)
        throw input_error("realization basis is not closed under commutators");
      LieAlgebra::BracketEntry e;
      e.i = i;
      e.j = j;
      for (std::size_t k = 0; k < n; ++k)
        if ((*coords)[k] != 0) e.coeffs.emplace_back(k, (*coords)[k]);
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back("b" + std::to_string(a + 1));
  R.algebra_ = LieAlgebra(n, labels, entries);

  R.trace_form_.symmetric = true;
  R.trace_form_.gram = RatMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Rat t = (R.basis_[a] * R.basis_[b]).trace();
      R.trace_form_.gram.at(a, b) = t;
      R.trace_form_.gram.at(b, a) = t;
    }
  return R;
}

RatMatrix MatrixRealization::embed(const RatVec& coords) const {
  if (coords.size() != basis_.size()) throw input_error("embed coordinate mismatch");
  RatMatrix out(msize_, msize_);
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    if (coords[a] == 0) continue;
    for (std::size_t i = 0; i < msize_; ++i)
      for (std::size_t j = 0; j < msize_; ++j)
        if (basis_[a].at(i, j) != 0) out.at(i, j) += coords[a] * basis_[a].at(i, j);
  }
  return out;
}

std::optional<RatVec> MatrixRealization::coords_of_matrix(const RatMatrix& m) const {
  if (m.rows() != msize_ || m.cols() != msize_) return std::nullopt;
  return coord_solver_->solve(flatten_matrix(m));
}

Vec MatrixRealization::covector_of_matrix(const RatMatrix& m) const {
  RatVec mu(basis_.size());
  for (std::size_t a = 0; a < basis_.size(); ++a) mu[a] = (m * basis_[a]).trace();
  return Vec(Space::Dual, std::move(mu));
}

RatMatrix MatrixRealization::matrix_of_covector(const Vec& mu) const {
  if (mu.space != Space::Dual || mu.dim() != basis_.size())
    throw input_error("covector dimension mismatch");
  if (!trace_form_.is_nondegenerate())
    throw input_error("trace form degenerate: cannot invert the identification");
  LinearSolver solver(trace_form_.gram);
  auto x = solver.solve(mu.coords);
  if (!x) throw invariant_error("trace identification solve failed");
  return embed(*x);
}

// ------------------------------------------------------------ jordan types

std::size_t JordanType::matrix_size() const {
  std::size_t n = 0;
  for (const auto& b : blocks)
    for (int d : b.partition) n += d;
  return n;
}

long JordanType::h_sum() const {
  long h = 0;
  for (const auto& b : blocks) h += b.partition.empty() ? 0 : b.partition.front();
  return h;
}

Rat JordanType::trace() const {
  Rat t(0);
  for (const auto& b : blocks) {
    long size = 0;
    for (int d : b.partition) size += d;
    t += b.eigenvalue * Rat(size);
  }
  return t;
}

bool JordanType::is_semisimple() const {
  for (const auto& b : blocks)
    for (int d : b.partition)
      if (d != 1) return false;
  return true;
}

std::string JordanType::str() const {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += "; ";
    out += rat_str(b.eigenvalue) + ":[";
    for (std::size_t i = 0; i < b.partition.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(b.partition[i]);
    }
    out += "]";
  }
  return out;
}

// Univariate polynomials, coefficient of x^i at index i.
namespace {

using UPoly = std::vector<Rat>;

void uv_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly uv_derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  uv_trim(d);
  return d;
}

Rat uv_eval(const UPoly& p, const Rat& x) {
  Rat v(0);
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

/// Division with remainder (coefficients in Q).
std::pair<UPoly, UPoly> uv_divmod(const UPoly& a, const UPoly& b) {
  UPoly rem = a, quot(a.size(), Rat(0));
  uv_trim(rem);
  const std::size_t db = b.size() - 1;
  const Rat lead = b.back();
  while (rem.size() >= b.size() && !rem.empty()) {
    const std::size_t shift = rem.size() - b.size();
    const Rat f = rem.back() / lead;
    quot[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= f * b[i];
    uv_trim(rem);
  }
  uv_trim(quot);
  return {quot, rem};
}

UPoly uv_gcd(UPoly a, UPoly b) {
  uv_trim(a);
  uv_trim(b);
  while (!b.empty()) {
    auto [q, r] = uv_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Rat inv = Rat(1) / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

/// Monic characteristic polynomial det(xI - M) by Faddeev-LeVerrier.
UPoly char_poly(const RatMatrix& M) {
  const std::size_t n = M.rows();
  UPoly p(n + 1, Rat(0));
  p[n] = 1;
  RatMatrix Mk = M;
  std::vector<Rat> c(n + 1, Rat(0));
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      RatMatrix tmp = Mk;
      for (std::size_t i = 0; i < n; ++i) tmp.at(i, i) -= c[k - 1];
      Mk = M * tmp;
    }
    c[k] = Mk.trace() / Rat(static_cast<long>(k));
    p[n - k] = -c[k];
  }
  return p;
}

std::vector<mpz_class> divisors_up_to_budget(mpz_class v) {
  if (v < 0) v = -v;
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class p = 2; p * p <= v && p < 1000000; ++p) {
    if (v % p == 0) {
      int e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (v > 1) factors.emplace_back(v, 1);  // large cofactor, possibly composite
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t d = 0; d < base; ++d) divs.push_back(divs[d] * pk);
    }
  }
  return divs;
}

/// All rational roots with multiplicities. Throws if the polynomial does
/// not split over Q (multiplicities would not sum to the degree).
std::vector<std::pair<Rat, int>> rational_roots_total(const UPoly& monic) {
  UPoly p = monic;
  uv_trim(p);
  const std::size_t degree = p.size() - 1;
  std::vector<std::pair<Rat, int>> roots;

  // Strip zero roots first.
  int zero_mult = 0;
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);

  if (p.size() > 1) {
    // Squarefree part keeps every root once with smaller coefficients.
    UPoly g = uv_gcd(p, uv_derivative(p));
    UPoly sf = (g.size() <= 1) ? p : uv_divmod(p, g).first;

    mpz_class den_lcm(1);
    for (const auto& c : sf) {
      mpz_class cd = c.get_den();
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), den_lcm.get_mpz_t(), cd.get_mpz_t());
      den_lcm = den_lcm / gg * cd;
    }
    std::vector<mpz_class> zc;
    for (const auto& c : sf) zc.push_back(mpz_class(c.get_num() * (den_lcm / c.get_den())));
    const auto nums = divisors_up_to_budget(zc.front());
    const auto dens = divisors_up_to_budget(zc.back());
    std::set<Rat> candidates;
    for (const auto& pn : nums)
      for (const auto& qd : dens) {
        Rat cand(pn, qd);
        cand.canonicalize();
        candidates.insert(cand);
        candidates.insert(Rat(-cand));
      }
    for (const auto& cand : candidates) {
      if (uv_eval(sf, cand) != 0) continue;
      // Multiplicity from the original polynomial.
      UPoly cur = p;
      int mult = 0;
      const UPoly lin{Rat(-cand), Rat(1)};
      while (true) {
        auto [q, r] = uv_divmod(cur, lin);
        if (!r.empty()) break;
        cur = std::move(q);
        ++mult;
        if (cur.size() <= 1) break;
      }
      if (mult > 0) roots.emplace_back(cand, mult);
    }
  }

  long total = 0;
  for (const auto& [root, mult] : roots) total += mult;
  if (static_cast<std::size_t>(total) != degree)
    throw input_error("matrix spectrum is not rational (char poly does not split over Q)");
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

}  // namespace

JordanType jordan_type(const RatMatrix& M) {
  if (M.rows() != M.cols()) throw input_error("jordan type expects a square matrix");
  const std::size_t n = M.rows();
  const auto roots = rational_roots_total(char_poly(M));
  JordanType t;
  for (const auto& [lambda, mult] : roots) {
    RatMatrix N = M;
    for (std::size_t i = 0; i < n; ++i) N.at(i, i) -= lambda;
    // Conjugate-partition counts from the exact rank sequence.
    std::vector<int> ge_counts;  // c_k = #blocks of size >= k
    RatMatrix Nk = N;
    std::size_t prev_rank = n;
    while (true) {
      const std::size_t rk = Nk.rank();
      const int ck = static_cast<int>(prev_rank - rk);
      if (ck == 0) break;
      ge_counts.push_back(ck);
      prev_rank = rk;
      if (static_cast<long>(n - rk) >= mult) break;
      Nk = Nk * N;
    }
    std::vector<int> partition;
    const int rows = ge_counts.empty() ? 0 : ge_counts[0];
    for (int i = 1; i <= rows; ++i) {
      int part = 0;
      for (int c : ge_counts)
        if (c >= i) ++part;
      partition.push_back(part);
    }
    long check = 0;
    for (int d : partition) check += d;
    if (check != mult) throw invariant_error("jordan partition does not match multiplicity");
    t.blocks.push_back({lambda, std::move(partition)});
  }
  return t;
}

std::size_t centralizer_dim_from_type(const JordanType& t, bool sl) {
  std::size_t dim = 0;
  for (const auto& b : t.blocks)
    for (int di : b.partition)
      for (int dj : b.partition) dim += static_cast<std::size_t>(std::min(di, dj));
  return sl ? dim - 1 : dim;
}

long sheet_dim_sl(const JordanType& t, std::size_t n) {
  if (t.matrix_size() != n) throw input_error("jordan type size mismatch");
  const long cgl = static_cast<long>(centralizer_dim_from_type(t, false));
  const long orbit = static_cast<long>(n * n) - cgl;  // = (n^2-1) - (cgl-1)
  return orbit + t.h_sum() - 1;
}

namespace {

struct BlockLayout {
  Rat eigenvalue;
  int size = 0;
  std::size_t offset = 0;
};

std::vector<BlockLayout> layout_of_type(const JordanType& t) {
  std::vector<BlockLayout> blocks;
  std::size_t off = 0;
  for (const auto& b : t.blocks)
    for (int d : b.partition) {
      blocks.push_back({b.eigenvalue, d, off});
      off += d;
    }
  return blocks;
}

}  // namespace

RatMatrix jordan_matrix_of_type(const JordanType& t) {
  const std::size_t n = t.matrix_size();
  RatMatrix J(n, n);
  for (const auto& b : layout_of_type(t)) {
    for (int i = 0; i < b.size; ++i) {
      J.at(b.offset + i, b.offset + i) = b.eigenvalue;
      if (i + 1 < b.size) J.at(b.offset + i, b.offset + i + 1) = 1;
    }
  }
  return J;
}

JordanReduction jordan_reduce(const RatMatrix& M) {
  const std::size_t n = M.rows();
  JordanReduction out;
  out.type = jordan_type(M);

  std::vector<RatVec> columns;
  for (const auto& block : out.type.blocks) {
    RatMatrix N = M;
    for (std::size_t i = 0; i < n; ++i) N.at(i, i) -= block.eigenvalue;
    const int h = block.partition.front();
    // Kernels of successive powers.
    std::vector<Subspace> V;  // V[k] = ker N^k
    V.push_back(Subspace::zero(Space::Alg, n));
    RatMatrix Nk = RatMatrix::identity(n);
    std::vector<RatMatrix> Npow{Nk};
    for (int k = 1; k <= h; ++k) {
      Nk = Nk * N;
      Npow.push_back(Nk);
      V.push_back(Subspace::from_echelon(Space::Alg, n, Nk.kernel()));
    }
    // Chain tops, tallest first.
    std::vector<std::pair<RatVec, int>> tops;
    for (int k = h; k >= 1; --k) {
      std::vector<RatVec> grows;
      for (std::size_t r = 0; r < V[k - 1].dim(); ++r) grows.push_back(V[k - 1].basis_row(r));
      for (const auto& [w, s] : tops)
        if (s > k) grows.push_back(Npow[s - k].apply(w));
      Subspace G = Subspace::span(Space::Alg, n, grows);
      for (std::size_t r = 0; r < V[k].dim(); ++r) {
        RatVec v = V[k].basis_row(r);
        if (G.contains(Vec(Space::Alg, v))) continue;
        tops.emplace_back(v, k);
        grows.push_back(v);
        G = Subspace::span(Space::Alg, n, grows);
      }
    }
    std::stable_sort(tops.begin(), tops.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<int> sizes;
    for (const auto& [w, s] : tops) {
      sizes.push_back(s);
      for (int j = s - 1; j >= 0; --j) columns.push_back(Npow[j].apply(w));
    }
    if (sizes != block.partition)
      throw invariant_error("jordan chain sizes disagree with the computed partition");
  }

  RatMatrix P(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) P.at(r, c) = columns[c][r];
  auto Pinv = rat_inverse(P);
  if (!Pinv) throw invariant_error("jordan basis is singular");
  out.P = P;
  out.Pinv = *Pinv;
  const RatMatrix J = jordan_matrix_of_type(out.type);
  if (!(M * P == P * J)) throw invariant_error("jordan reduction verification failed");
  return out;
}

// ------------------------------------------------------------- centralizer

Subspace centralizer(const MatrixRealization& R, const RatMatrix& mu) {
  auto coords = R.coords_of_matrix(mu);
  if (!coords)
    throw input_error("matrix lies outside the realized algebra " + R.name());
  return Subspace::from_echelon(Space::Alg, R.algebra().dim(),
                                R.algebra().ad(Vec(Space::Alg, *coords)).kernel());
}

// ------------------------------------------------------- deformation family

DeformationFamily deformation_family(const MatrixRealization& R, const RatMatrix& mu,
                                     std::uint64_t seed) {
  if (R.kind() != RealizationKind::GL && R.kind() != RealizationKind::SL)
    throw input_error("deformation family expects a gl/sl realization");
  auto coords = R.coords_of_matrix(mu);
  if (!coords) throw input_error("matrix lies outside the realized algebra");

  const JordanReduction red = jordan_reduce(mu);
  const auto blocks = layout_of_type(red.type);
  const std::size_t n = mu.rows();

  // One prefix-diagonal direction per (eigenvalue, depth): depth i of
  // every block of that eigenvalue with size >= i gets a shared epsilon.
  struct PrefixDir {
    RatMatrix mat;
    long multiplicity = 0;  // its trace
  };
  std::vector<PrefixDir> dirs;
  for (const auto& eb : red.type.blocks) {
    const int h = eb.partition.front();
    for (int depth = 1; depth <= h; ++depth) {
      RatMatrix D(n, n);
      long mult = 0;
      for (const auto& bl : blocks) {
        if (!(bl.eigenvalue == eb.eigenvalue) || bl.size < depth) continue;
        D.at(bl.offset + depth - 1, bl.offset + depth - 1) = 1;
        ++mult;
      }
      dirs.push_back({std::move(D), mult});
    }
  }

  DeformationFamily fam;
  fam.basepoint = mu;
  const std::size_t q = dirs.size();
  for (std::size_t j = 1; j < q; ++j) {
    // m_0 * D_j - m_j * D_0 is traceless.
    RatMatrix D = dirs[j].mat.scaled(Rat(dirs[0].multiplicity)) -
                  dirs[0].mat.scaled(Rat(dirs[j].multiplicity));
    fam.directions.push_back(red.P * D * red.Pinv);
  }

  const std::size_t base_dim = centralizer(R, mu).dim();
  const long expected_p = red.type.h_sum() - 1;
  if (static_cast<long>(fam.directions.size()) != expected_p)
    throw invariant_error("deformation family parameter count mismatch");

  // The family keeps the centralizer dimension at generic parameters;
  // verify at three seeded rational samples.
  for (int trial = 0; trial < 3; ++trial) {
    SplitMix64 rng(derive_seed(seed, 7000 + trial));
    RatMatrix sample = mu;
    for (const auto& d : fam.directions) {
      Rat eps(rng.next_int(1, 97), rng.next_int(1, 13));
      eps.canonicalize();
      sample = sample + d.scaled(eps);
    }
    if (centralizer(R, sample).dim() != base_dim)
      throw invariant_error("centralizer dimension jumped along the deformation family");
  }
  return fam;
}

// ------------------------------------------------------------ sheet tangent

namespace {

/// First-order moves of the invariant-factor slice at a one-eigenvalue
/// Jordan group: companion blocks C(f_i) with the nested divisor chain
/// f_r | f_{r-1} | ... | f_1 written as f_i = f_r * u_{r-1} * ... * u_i.
/// Freeing the coefficients of f_r and of each quotient u_l keeps the
/// chain (hence the invariant-factor degrees) exact along every
/// parameter curve, so each direction is a certified sheet tangent.
std::vector<RatMatrix> slice_directions(const std::vector<BlockLayout>& group,
                                        std::size_t n) {
  std::vector<RatMatrix> out;
  const std::size_t r = group.size();
  const int d_last = group.back().size;
  // Parameters of f_r: coefficient j contributes x^{j + d_i - d_r} to
  // every block i.
  for (int j = 0; j < d_last; ++j) {
    RatMatrix W(n, n);
    for (const auto& bl : group)
      W.at(bl.offset + bl.size - 1, bl.offset + j + bl.size - d_last) = 1;
    out.push_back(std::move(W));
  }
  // Parameters of u_l (degree m_l = d_l - d_{l+1}): coefficient j
  // contributes x^{j + d_i - m_l} to blocks i <= l.
  for (std::size_t l = 0; l + 1 < r; ++l) {
    const int ml = group[l].size - group[l + 1].size;
    for (int j = 0; j < ml; ++j) {
      RatMatrix W(n, n);
      for (std::size_t i = 0; i <= l; ++i) {
        const auto& bl = group[i];
        W.at(bl.offset + bl.size - 1, bl.offset + j + bl.size - ml) = 1;
      }
      out.push_back(std::move(W));
    }
  }
  return out;
}

Subspace flat_rows_to_abstract(const MatrixRealization& R, const Subspace& flat) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < flat.dim(); ++i) {
    auto coords = R.coords_of_matrix(unflatten_matrix(flat.basis_row(i), R.matrix_size()));
    if (!coords) throw invariant_error("tangent row escaped the algebra span");
    rows.push_back(std::move(*coords));
  }
  return Subspace::span(Space::Alg, R.algebra().dim(), rows);
}

}  // namespace

Subspace sheet_tangent_sl(const MatrixRealization& R, const RatMatrix& mu) {
  if (R.kind() != RealizationKind::GL && R.kind() != RealizationKind::SL)
    throw input_error("sheet tangent (sl form) expects a gl/sl realization");
  auto mu_coords = R.coords_of_matrix(mu);
  if (!mu_coords) throw input_error("matrix lies outside the realized algebra");

  const std::size_t n = mu.rows();
  const JordanReduction red = jordan_reduce(mu);
  const RatMatrix J = jordan_matrix_of_type(red.type);
  const auto blocks = layout_of_type(red.type);

  std::vector<RatVec> flat_rows;
  // Orbit directions [x, J] over elementary matrices (ad_I = 0, so this
  // spans [g, J] for both gl and sl).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      RatMatrix E(n, n);
      E.at(a, b) = 1;
      const RatMatrix c = commutator(E, J);
      if (!c.is_zero()) flat_rows.push_back(flatten_matrix(red.P * c * red.Pinv));
    }
  // Slice directions per eigenvalue group.
  for (const auto& eb : red.type.blocks) {
    std::vector<BlockLayout> group;
    for (const auto& bl : blocks)
      if (bl.eigenvalue == eb.eigenvalue) group.push_back(bl);
    for (const auto& W : slice_directions(group, n))
      flat_rows.push_back(flatten_matrix(red.P * W * red.Pinv));
  }
  // The trace line is tangent to every gl sheet (eigenvalue shift).
  if (R.kind() == RealizationKind::GL)
    flat_rows.push_back(flatten_matrix(RatMatrix::identity(n)));

  Subspace flat = Subspace::span(Space::Alg, n * n, flat_rows);
  flat = intersect(flat, R.flat_span());

  const std::size_t cent_dim = centralizer(R, mu).dim();
  const long orbit_dim = static_cast<long>(R.algebra().dim()) - static_cast<long>(cent_dim);
  const long expected =
      orbit_dim + red.type.h_sum() - (R.kind() == RealizationKind::SL ? 1 : 0);
  if (static_cast<long>(flat.dim()) != expected)
    throw invariant_error("sheet tangent dimension " + std::to_string(flat.dim()) +
                          " disagrees with closed form " + std::to_string(expected));
  return flat_rows_to_abstract(R, flat);
}

Subspace sheet_tangent_semisimple(const MatrixRealization& R, const RatMatrix& mu) {
  auto mu_coords = R.coords_of_matrix(mu);
  if (!mu_coords) throw input_error("matrix lies outside the realized algebra");

  // Semisimplicity: the squarefree part of the characteristic polynomial
  // annihilates mu exactly iff the minimal polynomial is squarefree.
  {
    UPoly p = char_poly(mu);
    UPoly g = uv_gcd(p, uv_derivative(p));
    UPoly q = (g.size() <= 1) ? p : uv_divmod(p, g).first;
    const std::size_t n = mu.rows();
    RatMatrix acc(n, n);
    for (std::size_t i = q.size(); i-- > 0;) {
      acc = acc * mu;
      for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += q[i];
    }
    if (!acc.is_zero()) throw input_error("matrix is not semisimple");
  }

  const Vec mu_vec(Space::Alg, *mu_coords);
  const LieAlgebra& L = R.algebra();
  const RatMatrix ad = L.ad(mu_vec);
  std::vector<RatVec> rows;
  for (std::size_t j = 0; j < L.dim(); ++j) {
    RatVec col(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) col[i] = ad.at(i, j);
    if (!vec_is_zero(col)) rows.push_back(std::move(col));
  }
  const Subspace cent = centralizer(R, mu);
  const Subspace z = center_of_subalgebra(L, cent);
  for (std::size_t i = 0; i < z.dim(); ++i) rows.push_back(z.basis_row(i));
  return Subspace::span(Space::Alg, L.dim(), rows);
}

// ------------------------------------------------------------ sheet report

SheetReport check_sheet_eq(const MatrixRealization& R, const RatMatrix& mu,
                           const Subspace& tangent) {
  if (!R.trace_form().is_nondegenerate())
    throw input_error("sheetEq requires a nondegenerate trace form");
  auto mu_coords = R.coords_of_matrix(mu);
  if (!mu_coords) throw input_error("matrix lies outside the realized algebra");
  const LieAlgebra& L = R.algebra();

  SheetReport rep;
  rep.mu_coords = *mu_coords;
  rep.tangent = tangent;

  const RatMatrix ad = L.ad(Vec(Space::Alg, *mu_coords));
  std::vector<RatVec> orbit_rows;
  for (std::size_t j = 0; j < L.dim(); ++j) {
    RatVec col(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) col[i] = ad.at(i, j);
    if (!vec_is_zero(col)) orbit_rows.push_back(std::move(col));
  }
  rep.orbit_tangent = Subspace::span(Space::Alg, L.dim(), orbit_rows);
  if (!tangent.contains_subspace(rep.orbit_tangent))
    throw input_error("supplied tangent does not contain the orbit tangent");

  const Subspace cent = centralizer(R, mu);
  rep.derived = derived_subalgebra(L, cent);
  if (!cent.contains_subspace(rep.derived))
    throw invariant_error("derived subalgebra escapes the centralizer");
  rep.tangent_perp = orthogonal_complement(L, tangent, R.trace_form());

  rep.dim_centralizer = cent.dim();
  rep.dim_derived = rep.derived.dim();
  rep.dim_orbit = rep.orbit_tangent.dim();
  rep.dim_sheet = tangent.dim();

  rep.orthogonal = true;
  for (std::size_t a = 0; a < rep.derived.dim() && rep.orthogonal; ++a)
    for (std::size_t b = 0; b < tangent.dim(); ++b)
      if (R.trace_form().eval(rep.derived.basis_row(a), tangent.basis_row(b)) != 0) {
        rep.orthogonal = false;
        break;
      }

  rep.eq_subspace = (rep.derived == rep.tangent_perp);
  rep.eq_codim = (rep.dim_derived == L.dim() - rep.dim_sheet);
  rep.eq_family =
      (static_cast<long>(rep.dim_centralizer) - static_cast<long>(rep.dim_derived) ==
       static_cast<long>(rep.dim_sheet) - static_cast<long>(rep.dim_orbit));
  rep.statements_agree =
      (rep.eq_subspace == rep.eq_codim) && (rep.eq_codim == rep.eq_family);
  return rep;
}

// -------------------------------------------------------------- partitions

std::vector<std::vector<int>> partitions_of(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

std::vector<NilpotentRow> nilpotent_block_identity(std::size_t m, ExecPolicy policy) {
  const MatrixRealization R = make_gl(m);
  const auto parts = partitions_of(static_cast<int>(m));
  std::vector<NilpotentRow> rows(parts.size());
  for_index(parts.size(), policy, [&](std::size_t idx) {
    JordanType t;
    t.blocks.push_back({Rat(0), parts[idx]});
    const RatMatrix nu = jordan_matrix_of_type(t);
    const Subspace cent = centralizer(R, nu);
    const Subspace derived = derived_subalgebra(R.algebra(), cent);
    NilpotentRow row;
    row.partition = parts[idx];
    row.dim_centralizer = cent.dim();
    row.dim_derived = derived.dim();
    row.largest_part = parts[idx].front();
    row.identity_holds =
        (row.dim_centralizer - row.dim_derived == static_cast<std::size_t>(row.largest_part));
    rows[idx] = std::move(row);
  });
  return rows;
}

std::vector<JordanType> sl_jordan_types(std::size_t n) {
  // Multisets of partitions with sizes summing to n, each part carrying
  // a distinct rational eigenvalue chosen to kill the trace.
  struct Piece {
    int size;
    std::vector<int> partition;
  };
  std::vector<Piece> pieces;
  for (int k = 1; k <= static_cast<int>(n); ++k)
    for (const auto& p : partitions_of(k)) pieces.push_back({k, p});

  std::vector<std::vector<std::size_t>> shapes;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, int rest, std::size_t max_piece) -> void {
    if (rest == 0) {
      shapes.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i <= max_piece; ++i) {
      if (pieces[i].size > rest) continue;
      cur.push_back(i);
      self(self, rest - pieces[i].size, i);
      cur.pop_back();
    }
  };
  rec(rec, static_cast<int>(n), pieces.size() - 1);

  std::vector<JordanType> out;
  for (const auto& shape : shapes) {
    const std::size_t s = shape.size();
    std::vector<Rat> eigs(s);
    if (s == 1) {
      eigs[0] = 0;  // single eigenvalue in sl must be 0
    } else {
      for (long shift = 0;; ++shift) {
        Rat weighted(0);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < s; ++i) {
          eigs[i] = Rat(static_cast<long>(i) + 1 + shift);
          weighted += eigs[i] * Rat(pieces[shape[i]].size);
        }
        eigs[s - 1] = -weighted / Rat(pieces[shape[s - 1]].size);
        for (std::size_t i = 0; i + 1 < s; ++i)
          if (eigs[i] == eigs[s - 1]) ok = false;
        if (ok) break;
      }
    }
    JordanType t;
    for (std::size_t i = 0; i < s; ++i)
      t.blocks.push_back({eigs[i], pieces[shape[i]].partition});
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const auto& a, const auto& b) { return a.eigenvalue < b.eigenvalue; });
    if (t.trace() != 0) throw invariant_error("jordan type enumeration lost tracelessness");
    out.push_back(std::move(t));
  }
  return out;
}

// ------------------------------------------------------------ realizations

MatrixRealization make_gl(std::size_t n) {
  if (n < 1) throw input_error("gl(n) needs n >= 1");
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix e(n, n);
      e.at(i, j) = 1;
      basis.push_back(std::move(e));
    }
  return MatrixRealization::from_basis("gl(" + std::to_string(n) + ")",
                                       RealizationKind::GL, std::move(basis));
}

MatrixRealization make_sl(std::size_t n) {
  if (n < 2) throw input_error("sl(n) needs n >= 2");
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RatMatrix e(n, n);
      e.at(i, j) = 1;
      basis.push_back(std::move(e));
    }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    RatMatrix h(n, n);
    h.at(k, k) = 1;
    h.at(k + 1, k + 1) = -1;
    basis.push_back(std::move(h));
  }
  return MatrixRealization::from_basis("sl(" + std::to_string(n) + ")",
                                       RealizationKind::SL, std::move(basis));
}

MatrixRealization make_so(std::size_t n) {
  if (n < 2) throw input_error("so(n) needs n >= 2");
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatMatrix a(n, n);
      a.at(i, j) = 1;
      a.at(j, i) = -1;
      basis.push_back(std::move(a));
    }
  return MatrixRealization::from_basis("so(" + std::to_string(n) + ")",
                                       RealizationKind::SO, std::move(basis));
}

MatrixRealization make_sp(std::size_t n) {
  if (n < 1) throw input_error("sp(2n) needs n >= 1");
  const std::size_t m = 2 * n;
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix h(m, m);
      h.at(i, j) = 1;
      h.at(n + j, n + i) = -1;
      basis.push_back(std::move(h));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RatMatrix u(m, m);
      u.at(i, n + j) = 1;
      u.at(j, n + i) = 1;
      basis.push_back(std::move(u));
      RatMatrix l(m, m);
      l.at(n + i, j) = 1;
      l.at(n + j, i) = 1;
      basis.push_back(std::move(l));
    }
  return MatrixRealization::from_basis("sp(" + std::to_string(m) + ")",
                                       RealizationKind::SP, std::move(basis));
}

MatrixRealization make_su(std::size_t n) {
  if (n < 2) throw input_error("su(n) needs n >= 2");
  const std::size_t m = 2 * n;  // complex matrices as real 2n x 2n blocks
  auto embed = [&](const RatMatrix& X, const RatMatrix& Y) {
    RatMatrix out(m, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out.at(i, j) = X.at(i, j);
        out.at(n + i, n + j) = X.at(i, j);
        out.at(i, n + j) = -Y.at(i, j);
        out.at(n + i, j) = Y.at(i, j);
      }
    return out;
  };
  std::vector<RatMatrix> basis;
  RatMatrix zero(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    RatMatrix y(n, n);
    y.at(k, k) = 1;
    y.at(k + 1, k + 1) = -1;
    basis.push_back(embed(zero, y));  // i(e_kk - e_{k+1,k+1})
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      RatMatrix x(n, n);
      x.at(k, l) = 1;
      x.at(l, k) = -1;
      basis.push_back(embed(x, zero));  // e_kl - e_lk
      RatMatrix y(n, n);
      y.at(k, l) = 1;
      y.at(l, k) = 1;
      basis.push_back(embed(zero, y));  // i(e_kl + e_lk)
    }
  return MatrixRealization::from_basis("su(" + std::to_string(n) + ")",
                                       RealizationKind::SU, std::move(basis));
}

}  // namespace liestrata
