#include "liestrata/algebra.hpp"

#include <json.hpp>

#include "liestrata/errors.hpp"

namespace liestrata {

const std::vector<std::pair<std::size_t, Rat>> LieAlgebra::kEmpty;

Rat BilinearForm::eval(const RatVec& a, const RatVec& b) const {
  return vec_dot(a, gram.apply(b));
}

bool BilinearForm::matches_declared_symmetry() const {
  const auto t = gram.transpose();
  return symmetric ? (t == gram) : (t == gram.scaled(Rat(-1)));
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels,
                       const std::vector<BracketEntry>& brackets)
    : dim_(dim), labels_(std::move(labels)) {
  if (dim_ == 0) throw input_error("algebra dimension must be positive");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_) throw input_error("basis label count mismatch");
  for (const auto& b : brackets) {
    if (b.i >= b.j) throw input_error("bracket entries must have i < j");
    if (b.j >= dim_) throw input_error("bracket index out of range");
    std::vector<std::pair<std::size_t, Rat>> coeffs;
    for (const auto& [k, v] : b.coeffs) {
      if (k >= dim_) throw input_error("bracket coefficient index out of range");
      if (v != 0) coeffs.emplace_back(k, v);
    }
    if (!coeffs.empty()) c_[{b.i, b.j}] = std::move(coeffs);
  }
}

Rat LieAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Rat(0);
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = c_.find({i, j});
  if (it == c_.end()) return Rat(0);
  for (const auto& [idx, v] : it->second)
    if (idx == k) return flip ? Rat(-v) : v;
  return Rat(0);
}

const std::vector<std::pair<std::size_t, Rat>>& LieAlgebra::basis_bracket(
    std::size_t i, std::size_t j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? kEmpty : it->second;
}

Vec LieAlgebra::bracket(const Vec& a, const Vec& b) const {
  if (a.space != Space::Alg || b.space != Space::Alg)
    throw input_error("bracket arguments must live in g");
  if (a.dim() != dim_ || b.dim() != dim_)
    throw input_error("bracket argument dimension mismatch");
  RatVec out(dim_, Rat(0));

  std::vector<std::size_t> support_a, support_b;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a.coords[i] != 0) support_a.push_back(i);
    if (b.coords[i] != 0) support_b.push_back(i);
  }
  if (support_a.size() * support_b.size() < 2 * c_.size()) {
    // Sparse inputs: walk index pairs and look the constants up.
    for (std::size_t i : support_a)
      for (std::size_t j : support_b) {
        if (i == j) continue;
        auto it = c_.find({std::min(i, j), std::max(i, j)});
        if (it == c_.end()) continue;
        Rat w = a.coords[i] * b.coords[j];
        if (i > j) w = -w;
        for (const auto& [k, v] : it->second) out[k] += w * v;
      }
    return Vec(Space::Alg, std::move(out));
  }

  for (const auto& [ij, coeffs] : c_) {
    const auto [i, j] = ij;
    const Rat w = a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i];
    if (w == 0) continue;
    for (const auto& [k, v] : coeffs) out[k] += w * v;
  }
  return Vec(Space::Alg, std::move(out));
}

bool LieAlgebra::jacobi_ok() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec ei = basis_vec(i);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vec ej = basis_vec(j);
      Vec bij = bracket(ei, ej);
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vec ek = basis_vec(k);
        Vec term = bracket(bij, ek);
        term = Vec(Space::Alg, vec_add(term.coords, bracket(bracket(ej, ek), ei).coords));
        term = Vec(Space::Alg, vec_add(term.coords, bracket(bracket(ek, ei), ej).coords));
        if (!term.is_zero()) return false;
      }
    }
  }
  return true;
}

RatMatrix LieAlgebra::ad(const Vec& a) const {
  if (a.space != Space::Alg) throw input_error("ad argument must live in g");
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(a, basis_vec(j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col.coords[k];
  }
  return m;
}

RatMatrix LieAlgebra::coadjoint_generator(const Vec& a) const {
  // <ad*_a mu, e_j> = -<mu, [a, e_j]>, so on coordinates the generator
  // is -(ad_a)^T.
  return ad(a).transpose().scaled(Rat(-1));
}

BilinearForm LieAlgebra::killing_form() const {
  std::vector<RatMatrix> ads;
  ads.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad(basis_vec(i)));
  BilinearForm K;
  K.gram = RatMatrix(dim_, dim_);
  K.symmetric = true;
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a; b < dim_; ++b) {
      Rat t(0);
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t s = 0; s < dim_; ++s) {
          const Rat& x = ads[a].at(r, s);
          if (x != 0) t += x * ads[b].at(s, r);
        }
      K.gram.at(a, b) = t;
      K.gram.at(b, a) = t;
    }
  return K;
}

Vec LieAlgebra::basis_vec(std::size_t i) const {
  RatVec v(dim_, Rat(0));
  v.at(i) = 1;
  return Vec(Space::Alg, std::move(v));
}

Subspace orthogonal_complement(const LieAlgebra& L, const Subspace& S,
                               const BilinearForm& B, bool allow_degenerate) {
  if (S.parent_dim() != L.dim() || B.dim() != L.dim())
    throw input_error("orthogonal complement dimension mismatch");
  if (!allow_degenerate && !B.is_nondegenerate())
    throw input_error("degenerate bilinear form (complementarity demanded)");
  if (S.dim() == 0) return Subspace::full(S.tag(), L.dim());
  // Condition on x: (S * gram) x = 0.
  RatMatrix sys = S.basis() * B.gram;
  return Subspace::from_echelon(S.tag(), L.dim(), sys.kernel());
}

Subspace annihilator(const LieAlgebra& L, const Subspace& S) {
  if (S.tag() != Space::Alg) throw input_error("annihilator expects a subspace of g");
  if (S.parent_dim() != L.dim()) throw input_error("annihilator dimension mismatch");
  if (S.dim() == 0) return Subspace::full(Space::Dual, L.dim());
  return Subspace::from_echelon(Space::Dual, L.dim(), S.basis().kernel());
}

LieAlgebra subalgebra_structure(const LieAlgebra& L, const Subspace& S) {
  if (S.tag() != Space::Alg) throw input_error("expected a subspace of g");
  const std::size_t r = S.dim();
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      Vec br = L.bracket(Vec(Space::Alg, S.basis_row(a)), Vec(Space::Alg, S.basis_row(b)));
      auto coords = S.coords_of(br);
      if (!coords)
        throw invariant_error("subspace not closed under bracket: witness pair (" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
      LieAlgebra::BracketEntry e;
      e.i = a;
      e.j = b;
      for (std::size_t k = 0; k < r; ++k)
        if ((*coords)[k] != 0) e.coeffs.emplace_back(k, (*coords)[k]);
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < r; ++a) labels.push_back("s" + std::to_string(a + 1));
  if (r == 0) throw input_error("cannot restrict to the zero subalgebra");
  return LieAlgebra(r, labels, entries);
}

LieAlgebra algebra_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad algebra JSON: ") + e.what());
  }
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw input_error("algebra JSON: missing positive \"dim\"");
  const std::size_t dim = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) labels = j["basis"].get<std::vector<std::string>>();
  std::vector<LieAlgebra::BracketEntry> entries;
  for (const auto& b : j.value("brackets", nlohmann::json::array())) {
    LieAlgebra::BracketEntry e;
    e.i = b.at("i").get<std::size_t>();
    e.j = b.at("j").get<std::size_t>();
    for (const auto& [k, v] : b.at("coeffs").items())
      e.coeffs.emplace_back(std::stoul(k), rat_parse(v.get<std::string>()));
    entries.push_back(std::move(e));
  }
  LieAlgebra L(dim, labels, entries);
  if (!L.jacobi_ok()) throw input_error("algebra JSON: Jacobi identity fails");
  return L;
}

std::string algebra_to_json(const LieAlgebra& L) {
  nlohmann::ordered_json j;
  j["dim"] = L.dim();
  j["basis"] = L.labels();
  auto brackets = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t jj = i + 1; jj < L.dim(); ++jj) {
      const auto& coeffs = L.basis_bracket(i, jj);
      if (coeffs.empty()) continue;
      nlohmann::ordered_json entry;
      entry["i"] = i;
      entry["j"] = jj;
      nlohmann::ordered_json cj;
      for (const auto& [k, v] : coeffs) cj[std::to_string(k)] = rat_str(v);
      entry["coeffs"] = cj;
      brackets.push_back(entry);
    }
  j["brackets"] = brackets;
  return j.dump(2) + "\n";
}

}  // namespace liestrata
