#include "liestrata/subspace.hpp"

#include "liestrata/errors.hpp"

namespace liestrata {

const char* space_name(Space s) { return s == Space::Alg ? "g" : "g*"; }

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.tag() != b.tag())
    throw input_error(std::string("space tag mismatch: ") + space_name(a.tag()) +
                      " vs " + space_name(b.tag()));
  if (a.parent_dim() != b.parent_dim()) throw input_error("ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::span(Space tag, std::size_t parent_dim,
                        const std::vector<RatVec>& generators) {
  for (const auto& g : generators)
    if (g.size() != parent_dim) throw input_error("generator length mismatch");
  RatMatrix m = RatMatrix::from_rows(generators, parent_dim);
  m.rref();
  Subspace s;
  s.tag_ = tag;
  s.parent_dim_ = parent_dim;
  s.basis_ = m.without_zero_rows();
  return s;
}

Subspace Subspace::span_vecs(Space tag, std::size_t parent_dim,
                             const std::vector<Vec>& generators) {
  std::vector<RatVec> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.space != tag) throw input_error("generator space tag mismatch");
    rows.push_back(g.coords);
  }
  return span(tag, parent_dim, rows);
}

Subspace Subspace::zero(Space tag, std::size_t parent_dim) {
  return span(tag, parent_dim, {});
}

Subspace Subspace::full(Space tag, std::size_t parent_dim) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < parent_dim; ++i) {
    RatVec e(parent_dim, Rat(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return span(tag, parent_dim, rows);
}

Subspace Subspace::from_echelon(Space tag, std::size_t parent_dim, RatMatrix m) {
  Subspace s;
  s.tag_ = tag;
  s.parent_dim_ = parent_dim;
  s.basis_ = std::move(m);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  return coords_of(v).has_value();
}

std::optional<RatVec> Subspace::coords_of(const Vec& v) const {
  if (v.space != tag_) throw input_error("vector space tag mismatch");
  if (v.dim() != parent_dim_) throw input_error("vector dimension mismatch");
  RatVec residual = v.coords;
  RatVec coeffs(dim(), Rat(0));
  // Basis rows are in echelon form: peel off each pivot in turn.
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t pivot = 0;
    while (pivot < parent_dim_ && basis_.at(r, pivot) == 0) ++pivot;
    const Rat c = residual[pivot];  // pivot entry of basis row is 1
    if (c == 0) continue;
    coeffs[r] = c;
    for (std::size_t j = pivot; j < parent_dim_; ++j)
      residual[j] -= c * basis_.at(r, j);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains_subspace(const Subspace& other) const {
  require_compatible(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(Vec(tag_, other.basis_row(r)))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<RatVec> rows;
  for (std::size_t r = 0; r < a.dim(); ++r) rows.push_back(a.basis_row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) rows.push_back(b.basis_row(r));
  return Subspace::span(a.tag(), a.parent_dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  // x in both spans: x = u^T A = v^T B. Solve [A^T | -B^T] null space and
  // read the intersection off the A-half.
  const std::size_t n = a.parent_dim();
  const std::size_t ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return Subspace::zero(a.tag(), n);
  RatMatrix sys(n, ra + rb);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < ra; ++r) sys.at(i, r) = a.basis().at(r, i);
    for (std::size_t r = 0; r < rb; ++r) sys.at(i, ra + r) = -b.basis().at(r, i);
  }
  RatMatrix null = sys.kernel();
  std::vector<RatVec> rows;
  for (std::size_t k = 0; k < null.rows(); ++k) {
    RatVec x(n, Rat(0));
    for (std::size_t r = 0; r < ra; ++r) {
      const Rat& u = null.at(k, r);
      if (u == 0) continue;
      for (std::size_t i = 0; i < n; ++i) x[i] += u * a.basis().at(r, i);
    }
    rows.push_back(std::move(x));
  }
  return Subspace::span(a.tag(), n, rows);
}

}  // namespace liestrata
