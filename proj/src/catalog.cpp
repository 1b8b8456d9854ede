#include "liestrata/catalog.hpp"

#include "liestrata/errors.hpp"

namespace liestrata {

namespace {

CatalogEntry from_realization(std::string name, long n, MatrixRealization R,
                              std::string note) {
  CatalogEntry e;
  e.name = std::move(name);
  e.param = n;
  e.algebra = R.algebra();
  e.note = std::move(note);
  e.realization = std::move(R);
  return e;
}

CatalogEntry make_duflo() {
  // Brackets read off the linear Poisson bivector:
  // [e1,e2]=e2, [e1,e3]=e3, [e1,e4]=2e4, [e2,e3]=e4.
  std::vector<LieAlgebra::BracketEntry> br;
  br.push_back({0, 1, {{1, Rat(1)}}});
  br.push_back({0, 2, {{2, Rat(1)}}});
  br.push_back({0, 3, {{3, Rat(2)}}});
  br.push_back({1, 2, {{3, Rat(1)}}});
  CatalogEntry e;
  e.name = "duflo";
  e.algebra = LieAlgebra(4, {"e1", "e2", "e3", "e4"}, br);
  e.note = "4-dim solvable algebra whose transverse Poisson structure is not linearizable";
  return e;
}

CatalogEntry make_heisenberg(long n) {
  if (n < 3 || n % 2 == 0)
    throw input_error("heisenberg(n) needs odd n >= 3");
  const long m = (n - 1) / 2;
  std::vector<LieAlgebra::BracketEntry> br;
  std::vector<std::string> labels;
  for (long i = 0; i < m; ++i) {
    br.push_back({static_cast<std::size_t>(2 * i), static_cast<std::size_t>(2 * i + 1),
                  {{static_cast<std::size_t>(n - 1), Rat(1)}}});
    labels.push_back("p" + std::to_string(i + 1));
    labels.push_back("q" + std::to_string(i + 1));
  }
  labels.push_back("z");
  CatalogEntry e;
  e.name = "heisenberg";
  e.param = n;
  e.algebra = LieAlgebra(static_cast<std::size_t>(n), labels, br);
  // Strictly upper-triangular realization in gl(m+2).
  const std::size_t sz = static_cast<std::size_t>(m + 2);
  std::vector<RatMatrix> basis;
  for (long i = 0; i < m; ++i) {
    RatMatrix p(sz, sz);
    p.at(0, 1 + i) = 1;
    basis.push_back(std::move(p));
    RatMatrix q(sz, sz);
    q.at(1 + i, sz - 1) = 1;
    basis.push_back(std::move(q));
  }
  RatMatrix z(sz, sz);
  z.at(0, sz - 1) = 1;
  basis.push_back(std::move(z));
  e.realization = MatrixRealization::from_basis("h" + std::to_string(n),
                                                RealizationKind::Other, std::move(basis));
  e.note = "Heisenberg algebra h_" + std::to_string(n);
  return e;
}

CatalogEntry make_aff1() {
  std::vector<LieAlgebra::BracketEntry> br;
  br.push_back({0, 1, {{1, Rat(1)}}});
  CatalogEntry e;
  e.name = "aff1";
  e.algebra = LieAlgebra(2, {"x", "y"}, br);
  std::vector<RatMatrix> basis;
  RatMatrix x(2, 2);
  x.at(0, 0) = 1;
  basis.push_back(std::move(x));
  RatMatrix y(2, 2);
  y.at(0, 1) = 1;
  basis.push_back(std::move(y));
  e.realization =
      MatrixRealization::from_basis("aff(1)", RealizationKind::Other, std::move(basis));
  e.note = "affine transformations of the line";
  return e;
}

}  // namespace

CatalogEntry catalog_make(const std::string& name, long n) {
  CatalogEntry e;
  if (name == "gl") {
    if (n < 1) throw input_error("gl needs --n >= 1");
    e = from_realization("gl", n, make_gl(n), "general linear algebra");
  } else if (name == "sl") {
    if (n < 2) throw input_error("sl needs --n >= 2");
    e = from_realization("sl", n, make_sl(n), "special linear algebra");
  } else if (name == "so") {
    if (n < 2) throw input_error("so needs --n >= 2");
    e = from_realization("so", n, make_so(n), "antisymmetric matrices");
  } else if (name == "sp") {
    if (n < 1) throw input_error("sp needs --n >= 1 (matrices of size 2n)");
    e = from_realization("sp", n, make_sp(n), "symplectic algebra sp(2n)");
  } else if (name == "su") {
    if (n < 2) throw input_error("su needs --n >= 2");
    e = from_realization("su", n, make_su(n),
                         "compact su(n), realized over Q as real 2n x 2n matrices");
  } else if (name == "aff1") {
    e = make_aff1();
  } else if (name == "heisenberg") {
    e = make_heisenberg(n == 0 ? 3 : n);
  } else if (name == "duflo") {
    e = make_duflo();
  } else {
    throw input_error("unknown catalog algebra '" + name + "'");
  }
  if (!e.algebra.jacobi_ok())
    throw invariant_error("catalog entry " + name + " fails the Jacobi identity");
  return e;
}

std::vector<std::string> catalog_names() {
  return {"gl", "sl", "so", "sp", "su", "aff1", "heisenberg", "duflo"};
}

}  // namespace liestrata
