#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liestrata/algebra.hpp"
#include "liestrata/catalog.hpp"
#include "liestrata/errors.hpp"
#include "liestrata/random.hpp"

using namespace liestrata;

namespace {

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// sl(2) in the (h, e, f) basis: [h,e]=2e, [h,f]=-2f, [e,f]=h.
LieAlgebra sl2_hef() {
  std::vector<LieAlgebra::BracketEntry> br;
  br.push_back({0, 1, {{1, Rat(2)}}});
  br.push_back({0, 2, {{2, Rat(-2)}}});
  br.push_back({1, 2, {{0, Rat(1)}}});
  return LieAlgebra(3, {"h", "e", "f"}, br);
}

/// Independent Killing oracle: build ad matrices column by column from
/// brackets and trace the products directly.
Rat killing_oracle(const LieAlgebra& L, std::size_t a, std::size_t b) {
  const RatMatrix ada = L.ad(L.basis_vec(a));
  const RatMatrix adb = L.ad(L.basis_vec(b));
  return (ada * adb).trace();
}

}  // namespace

TEST_CASE("bracket: defining relations and antisymmetry") {
  const auto h3 = catalog_make("heisenberg", 3);
  const Vec e1 = h3.algebra.basis_vec(0), e2 = h3.algebra.basis_vec(1);
  CHECK(h3.algebra.bracket(e1, e2) == h3.algebra.basis_vec(2));

  const auto duflo = catalog_make("duflo");
  CHECK(duflo.algebra.bracket(duflo.algebra.basis_vec(1), duflo.algebra.basis_vec(2)) ==
        duflo.algebra.basis_vec(3));

  // [a, a] = 0 and bilinearity on random exact inputs.
  SplitMix64 rng(11);
  const auto sl3 = catalog_make("sl", 3);
  for (int trial = 0; trial < 20; ++trial) {
    RatVec a(sl3.algebra.dim()), b(sl3.algebra.dim()), c(sl3.algebra.dim());
    for (auto& x : a) x = rng.next_rat(50);
    for (auto& x : b) x = rng.next_rat(50);
    for (auto& x : c) x = rng.next_rat(50);
    const Vec va(Space::Alg, a), vb(Space::Alg, b), vc(Space::Alg, c);
    CHECK(sl3.algebra.bracket(va, va).is_zero());
    const Rat s = rng.next_rat(10);
    // [a, s*b + c] = s*[a,b] + [a,c]
    const Vec lhs = sl3.algebra.bracket(
        va, Vec(Space::Alg, vec_add(vec_scale(s, b), c)));
    const Vec rhs(Space::Alg, vec_add(vec_scale(s, sl3.algebra.bracket(va, vb).coords),
                                      sl3.algebra.bracket(va, vc).coords));
    CHECK(lhs == rhs);
    // Antisymmetry.
    CHECK(sl3.algebra.bracket(va, vb).coords ==
          vec_scale(Rat(-1), sl3.algebra.bracket(vb, va).coords));
  }
}

TEST_CASE("jacobi: catalog algebras pass, a perturbed gl(2) fails") {
  CHECK(catalog_make("gl", 2).algebra.jacobi_ok());
  CHECK(catalog_make("duflo").algebra.jacobi_ok());

  // Take gl(2)'s constants and bump one coefficient by +1.
  const auto gl2 = catalog_make("gl", 2);
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      LieAlgebra::BracketEntry e;
      e.i = i;
      e.j = j;
      for (const auto& [k, v] : gl2.algebra.basis_bracket(i, j)) e.coeffs.emplace_back(k, v);
      entries.push_back(e);
    }
  entries[0].coeffs.emplace_back(3, Rat(1));
  const LieAlgebra broken(4, {}, entries);
  CHECK_FALSE(broken.jacobi_ok());
}

TEST_CASE("killing form of sl(2): frozen oracle values") {
  const LieAlgebra sl2 = sl2_hef();
  const BilinearForm K = sl2.killing_form();
  CHECK(K.gram.at(0, 0) == 8);   // K(h,h)
  CHECK(K.gram.at(1, 2) == 4);   // K(e,f)
  CHECK(K.gram.at(1, 1) == 0);   // K(e,e)
  CHECK(K.gram.at(0, 1) == 0);   // K(h,e)
  CHECK(K.matches_declared_symmetry());
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(K.gram.at(a, b) == killing_oracle(sl2, a, b));
  CHECK(K.is_nondegenerate());
}

TEST_CASE("killing form degenerate cases: abelian, heisenberg, duflo") {
  const LieAlgebra abelian(3, {}, {});
  CHECK(abelian.killing_form().gram.is_zero());
  CHECK(catalog_make("heisenberg", 3).algebra.killing_form().gram.is_zero());
  CHECK_FALSE(catalog_make("duflo").algebra.killing_form().is_nondegenerate());
}

TEST_CASE("orthogonal complement under the killing form") {
  const LieAlgebra sl2 = sl2_hef();
  const BilinearForm K = sl2.killing_form();

  const auto full = Subspace::full(Space::Alg, 3);
  CHECK(orthogonal_complement(sl2, full, K).dim() == 0);
  CHECK(orthogonal_complement(sl2, Subspace::zero(Space::Alg, 3), K) == full);

  // perp of span{e} is span{h, e}: solve K(x, e) = 0.
  const auto span_e = Subspace::span(Space::Alg, 3, {rv({0, 1, 0})});
  const auto perp = orthogonal_complement(sl2, span_e, K);
  CHECK(perp == Subspace::span(Space::Alg, 3, {rv({1, 0, 0}), rv({0, 1, 0})}));

  // Degenerate forms need the explicit flag.
  const auto h3 = catalog_make("heisenberg", 3);
  const BilinearForm Kh = h3.algebra.killing_form();
  const auto s = Subspace::span(Space::Alg, 3, {rv({1, 0, 0})});
  CHECK_THROWS_AS(orthogonal_complement(h3.algebra, s, Kh), input_error);
  CHECK(orthogonal_complement(h3.algebra, s, Kh, true).dim() == 3);
}

TEST_CASE("double perp and dimension identity on sl(3) with random subspaces") {
  const auto sl3 = catalog_make("sl", 3);
  const BilinearForm K = sl3.algebra.killing_form();
  REQUIRE(K.is_nondegenerate());
  SplitMix64 rng(5);
  const std::size_t n = sl3.algebra.dim();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RatVec> gens;
    const std::size_t count = 1 + rng.next_int(0, 5);
    for (std::size_t g = 0; g < count; ++g) {
      RatVec v(n);
      for (auto& x : v) x = rng.next_rat(20);
      gens.push_back(std::move(v));
    }
    const auto S = Subspace::span(Space::Alg, n, gens);
    const auto perp = orthogonal_complement(sl3.algebra, S, K);
    CHECK(S.dim() + perp.dim() == n);
    CHECK(orthogonal_complement(sl3.algebra, perp, K) == S);
  }
}

TEST_CASE("annihilator: dimensions and the gl(2) trace covector") {
  const auto gl2 = catalog_make("gl", 2);
  const std::size_t n = 4;
  CHECK(annihilator(gl2.algebra, Subspace::zero(Space::Alg, n)).dim() == n);
  CHECK(annihilator(gl2.algebra, Subspace::full(Space::Alg, n)).dim() == 0);

  // S = sl(2) inside gl(2), basis order (E11, E12, E21, E22):
  // span{E11 - E22, E12, E21} is annihilated exactly by the trace.
  const auto S = Subspace::span(
      Space::Alg, n, {rv({1, 0, 0, -1}), rv({0, 1, 0, 0}), rv({0, 0, 1, 0})});
  const auto ann = annihilator(gl2.algebra, S);
  CHECK(ann == Subspace::span(Space::Dual, n, {rv({1, 0, 0, 1})}));

  SplitMix64 rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<RatVec> gens;
    for (int g = 0; g < 3; ++g) {
      RatVec v(n);
      for (auto& x : v) x = rng.next_rat(9);
      gens.push_back(std::move(v));
    }
    const auto T = Subspace::span(Space::Alg, n, gens);
    CHECK(annihilator(gl2.algebra, T).dim() == n - T.dim());
  }
}

TEST_CASE("subalgebra restriction: closure witnesses and restricted brackets") {
  const auto gl2 = catalog_make("gl", 2);
  // span{E12, E21} is not closed: [E12, E21] = E11 - E22 escapes.
  const auto bad = Subspace::span(Space::Alg, 4, {rv({0, 1, 0, 0}), rv({0, 0, 1, 0})});
  CHECK_THROWS_AS(subalgebra_structure(gl2.algebra, bad), invariant_error);

  // The Borel span{E11, E12} restricts to aff(1).
  const auto borel = Subspace::span(Space::Alg, 4, {rv({1, 0, 0, 0}), rv({0, 1, 0, 0})});
  const LieAlgebra b = subalgebra_structure(gl2.algebra, borel);
  CHECK(b.dim() == 2);
  CHECK(b.bracket(b.basis_vec(0), b.basis_vec(1)) == b.basis_vec(1));
}

TEST_CASE("catalog coverage: jacobi, classical dimensions, killing degeneracy") {
  struct Expect {
    const char* name;
    long n;
    std::size_t dim;
    bool killing_nondegenerate;
  };
  const Expect table[] = {
      {"gl", 3, 9, false},        // gl has a center
      {"sl", 3, 8, true},
      {"sl", 4, 15, true},
      {"so", 3, 3, true},
      {"so", 4, 6, true},         // n(n-1)/2
      {"so", 5, 10, true},
      {"sp", 2, 10, true},        // n(2n+1)
      {"su", 2, 3, true},
      {"su", 3, 8, true},         // n^2 - 1
      {"aff1", 0, 2, false},
      {"heisenberg", 3, 3, false},
      {"heisenberg", 5, 5, false},
      {"duflo", 0, 4, false},
  };
  for (const auto& e : table) {
    const auto entry = catalog_make(e.name, e.n);
    CHECK(entry.algebra.dim() == e.dim);
    CHECK(entry.algebra.jacobi_ok());
    CHECK(entry.algebra.killing_form().is_nondegenerate() == e.killing_nondegenerate);
    if (entry.realization) {
      // Realized brackets reproduce the structure constants on a few pairs.
      const auto& R = *entry.realization;
      const std::size_t d = entry.algebra.dim();
      for (std::size_t i = 0; i < std::min<std::size_t>(d, 3); ++i)
        for (std::size_t j = i + 1; j < std::min<std::size_t>(d, 4); ++j) {
          const RatMatrix comm = R.basis()[i] * R.basis()[j] - R.basis()[j] * R.basis()[i];
          const Vec br = entry.algebra.bracket(entry.algebra.basis_vec(i),
                                               entry.algebra.basis_vec(j));
          CHECK(R.embed(br.coords) == comm);
        }
    }
  }
  CHECK_THROWS_AS(catalog_make("heisenberg", 4), input_error);
  CHECK_THROWS_AS(catalog_make("sl", 1), input_error);
}

TEST_CASE("algebra JSON round trip and exactness contract") {
  const auto duflo = catalog_make("duflo");
  const std::string text = algebra_to_json(duflo.algebra);
  const LieAlgebra back = algebra_from_json(text);
  CHECK(back.dim() == 4);
  CHECK(back.bracket(back.basis_vec(1), back.basis_vec(2)) == back.basis_vec(3));
  CHECK(algebra_to_json(back) == text);

  CHECK_THROWS_AS(algebra_from_json(R"({"dim":2,"basis":["a","b"],)"
                                    R"("brackets":[{"i":0,"j":1,"coeffs":{"1":"0.5"}}]})"),
                  input_error);
  // Jacobi-violating input is rejected at parse time.
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"dim":4,"basis":["a","b","c","d"],"brackets":[)"
          R"({"i":0,"j":1,"coeffs":{"2":"1"}},{"i":0,"j":2,"coeffs":{"3":"1"}},)"
          R"({"i":1,"j":2,"coeffs":{"0":"1"}},{"i":0,"j":3,"coeffs":{"1":"1"}}]})"),
      input_error);
}
