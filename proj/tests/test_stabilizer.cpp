#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liestrata/catalog.hpp"
#include "liestrata/errors.hpp"
#include "liestrata/matrixlie.hpp"
#include "liestrata/random.hpp"
#include "liestrata/stabilizer.hpp"

using namespace liestrata;

namespace {

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Vec dual(std::initializer_list<long> xs) { return Vec(Space::Dual, rv(xs)); }

}  // namespace

TEST_CASE("poisson tensor on the duflo algebra") {
  const auto duflo = catalog_make("duflo");
  CHECK(poisson_tensor(duflo.algebra, dual({0, 0, 0, 0})).matrix.is_zero());

  const auto B1 = poisson_tensor(duflo.algebra, dual({0, 1, 0, 0})).matrix;
  CHECK(B1.at(0, 1) == 1);
  CHECK(B1.at(1, 0) == -1);
  CHECK(B1.at(0, 2) == 0);
  CHECK(B1.at(0, 3) == 0);
  CHECK(B1.at(1, 2) == 0);
  CHECK(B1.rank() == 2);

  const auto B2 = poisson_tensor(duflo.algebra, dual({0, 0, 0, 1})).matrix;
  CHECK(B2.at(0, 3) == 2);
  CHECK(B2.at(1, 2) == 1);
  CHECK(B2.at(0, 1) == 0);
  CHECK(B2.rank() == 4);
}

TEST_CASE("stabilizers: zero point, duflo point, gl(3) block point") {
  const auto duflo = catalog_make("duflo");
  CHECK(stabilizer(duflo.algebra, dual({0, 0, 0, 0})).dim() == 4);

  const auto s = stabilizer(duflo.algebra, dual({0, 1, 0, 0}));
  CHECK(s == Subspace::span(Space::Alg, 4, {rv({0, 0, 1, 0}), rv({0, 0, 0, 1})}));

  // gl(3) at the covector of diag(1,1,2) under the trace pairing:
  // the stabilizer is the block subalgebra gl(2)+gl(1), dimension 5.
  const auto gl3 = catalog_make("gl", 3);
  RatMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = 2;
  const Vec mu = gl3.realization->covector_of_matrix(m);
  const auto stab = stabilizer(gl3.algebra, mu);
  CHECK(stab.dim() == 5);
  // It matches the centralizer pushed through the identification.
  CHECK(stab == centralizer(*gl3.realization, m));
}

TEST_CASE("derived subalgebra: abelian, block gl(2)+gl(1), perfect sl(2)") {
  const auto gl3 = catalog_make("gl", 3);
  const auto abelian = Subspace::span(
      Space::Alg, 9, {rv({1, 0, 0, 0, 0, 0, 0, 0, 0}), rv({0, 0, 0, 0, 1, 0, 0, 0, 0})});
  CHECK(derived_subalgebra(gl3.algebra, abelian).dim() == 0);

  RatMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = 2;
  const auto stab = stabilizer(gl3.algebra, gl3.realization->covector_of_matrix(m));
  const auto derived = derived_subalgebra(gl3.algebra, stab);
  CHECK(derived.dim() == 3);                    // a copy of sl(2)
  CHECK(stab.dim() - derived.dim() == 2);       // s = 2 diagonal blocks
  CHECK(stab.contains_subspace(derived));

  // Ideal property: [S, derived] inside derived.
  for (std::size_t a = 0; a < stab.dim(); ++a)
    for (std::size_t b = 0; b < derived.dim(); ++b)
      CHECK(derived.contains(gl3.algebra.bracket(Vec(Space::Alg, stab.basis_row(a)),
                                                 Vec(Space::Alg, derived.basis_row(b)))));

  // sl(2) is perfect.
  const auto sl2 = catalog_make("sl", 2);
  CHECK(derived_subalgebra(sl2.algebra, Subspace::full(Space::Alg, 3)).dim() == 3);
}

TEST_CASE("center of a subalgebra") {
  const auto h3 = catalog_make("heisenberg", 3);
  const auto full = Subspace::full(Space::Alg, 3);
  CHECK(center_of_subalgebra(h3.algebra, full) ==
        Subspace::span(Space::Alg, 3, {rv({0, 0, 1})}));

  // Abelian subalgebra is its own center.
  const auto gl2 = catalog_make("gl", 2);
  const auto diag = Subspace::span(Space::Alg, 4, {rv({1, 0, 0, 0}), rv({0, 0, 0, 1})});
  CHECK(center_of_subalgebra(gl2.algebra, diag) == diag);

  // gl(2)+gl(1) inside gl(3): center = the two block identities.
  const auto gl3 = catalog_make("gl", 3);
  RatMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = 2;
  const auto stab = stabilizer(gl3.algebra, gl3.realization->covector_of_matrix(m));
  const auto z = center_of_subalgebra(gl3.algebra, stab);
  CHECK(z.dim() == 2);
  // diag(1,1,0) and diag(0,0,1) span it (basis order E11..E33 row-major).
  CHECK(z.contains(Vec(Space::Alg, rv({1, 0, 0, 0, 1, 0, 0, 0, 0}))));
  CHECK(z.contains(Vec(Space::Alg, rv({0, 0, 0, 0, 0, 0, 0, 0, 1}))));
}

TEST_CASE("analyze_point aggregates and enforces invariants") {
  const auto gl3 = catalog_make("gl", 3);
  RatMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = 2;
  const auto rep = analyze_point(gl3.algebra, gl3.realization->covector_of_matrix(m));
  CHECK(rep.dim_stabilizer == 5);
  CHECK(rep.dim_derived == 3);
  CHECK(rep.orbit_dim == 4);

  // mu = 0: stabilizer is everything, derived is [g, g].
  const auto zero = analyze_point(gl3.algebra, dual({0, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(zero.dim_stabilizer == 9);
  CHECK(zero.derived ==
        derived_subalgebra(gl3.algebra, Subspace::full(Space::Alg, 9)));
  CHECK(zero.dim_derived == 8);  // sl(3)

  const auto duflo = catalog_make("duflo");
  const auto drep = analyze_point(duflo.algebra, dual({0, 1, 0, 0}));
  CHECK(drep.dim_stabilizer == 2);
  CHECK(drep.dim_derived == 0);
  CHECK(drep.orbit_dim == 2);
  CHECK(drep.type == StabilizerType::Abelian);
}

TEST_CASE("stabilizer type trichotomy") {
  // Abelian.
  const auto gl2 = catalog_make("gl", 2);
  const auto diag = Subspace::span(Space::Alg, 4, {rv({1, 0, 0, 0}), rv({0, 0, 0, 1})});
  CHECK(classify_stabilizer_type(gl2.algebra, diag) == StabilizerType::Abelian);

  // h3 + line inside heisenberg(5): derived line is central.
  const auto h5 = catalog_make("heisenberg", 5);
  const auto h3_plus = Subspace::span(
      Space::Alg, 5,
      {rv({1, 0, 0, 0, 0}), rv({0, 1, 0, 0, 0}), rv({0, 0, 0, 0, 1}), rv({0, 0, 1, 0, 0})});
  CHECK(classify_stabilizer_type(h5.algebra, h3_plus) ==
        StabilizerType::HeisenbergPlusAbelian);

  // aff(1): [x, z] = z with z not central.
  const auto aff = catalog_make("aff1");
  CHECK(classify_stabilizer_type(aff.algebra, Subspace::full(Space::Alg, 2)) ==
        StabilizerType::Aff1PlusAbelian);

  // dim derived >= 2.
  const auto sl2 = catalog_make("sl", 2);
  CHECK(classify_stabilizer_type(sl2.algebra, Subspace::full(Space::Alg, 3)) ==
        StabilizerType::Other);
}

TEST_CASE("multivariate polynomials: gcd, exact division, squarefree parts") {
  const std::size_t nv = 3;
  const Poly x = Poly::var(nv, 0), y = Poly::var(nv, 1), z = Poly::var(nv, 2);
  const Poly one = Poly::constant(nv, Rat(1));

  // gcd((x+y)^2 * z, (x+y) * x) = x + y.
  const Poly s = x + y;
  CHECK(poly_gcd(s * s * z, s * x) == s.primitive_normalized());

  // Coprime polynomials.
  CHECK(poly_gcd(x * y + one, x) == one);
  CHECK(poly_gcd(x * x + y * y, x * y) == one);

  // Rational coefficients are cleared to a primitive representative.
  const Poly half_s = s.scaled(Rat(1, 2));
  CHECK(poly_gcd(half_s * half_s, half_s * z) == s.primitive_normalized());

  // Exact division round trip and rejection of inexact division.
  const Poly prod = (x + y) * (y + z) * (x + z);
  CHECK(prod.divexact(x + z) == (x + y) * (y + z));
  CHECK_THROWS_AS((x * x + y).divexact(x + one), invariant_error);

  // Squarefree parts: multiplicities drop to one.
  const Poly d = (x + y) * (x + y) * z * z * z * (x + one);
  const Poly sf = d.squarefree_part();
  CHECK(sf == ((x + y) * z * (x + one)).primitive_normalized());
  CHECK(Poly::constant(nv, Rat(7)).squarefree_part() == one);

  // Bareiss determinant on a polynomial matrix: det [[x, y], [y, x]].
  const Poly det = Poly::det({{x, y}, {y, x}});
  CHECK(det == x * x - y * y);
  // Singular symbolic matrix.
  CHECK(Poly::det({{x, y}, {x, y}}).is_zero());
}

TEST_CASE("singular polynomial: duflo hypersurface, sl(2) and abelian NONE") {
  const auto duflo = catalog_make("duflo");
  const auto D = singular_polynomial(duflo.algebra);
  REQUIRE(D.has_value());
  CHECK(*D == Poly::var(4, 3));  // x4, normalized

  const LieAlgebra abelian(3, {}, {});
  CHECK_FALSE(singular_polynomial(abelian).has_value());

  const auto sl2 = catalog_make("sl", 2);
  CHECK_FALSE(singular_polynomial(sl2.algebra).has_value());

  const auto gl3 = catalog_make("gl", 3);
  CHECK_THROWS_AS(singular_polynomial(gl3.algebra), input_error);  // dim 9 > bound 8
}

TEST_CASE("stabilizer properties on random covectors") {
  SplitMix64 rng(123);
  for (const char* name : {"duflo", "aff1"}) {
    const auto entry = catalog_make(name);
    for (int trial = 0; trial < 15; ++trial) {
      RatVec c(entry.algebra.dim());
      for (auto& x : c) x = rng.next_rat(1000);
      const Vec mu(Space::Dual, c);
      const auto stab = stabilizer(entry.algebra, mu);  // closure checked inside
      // <mu, [a,b]> = 0 for a, b in the stabilizer (definitional identity).
      for (std::size_t a = 0; a < stab.dim(); ++a)
        for (std::size_t b = a + 1; b < stab.dim(); ++b) {
          const Vec br = entry.algebra.bracket(Vec(Space::Alg, stab.basis_row(a)),
                                               Vec(Space::Alg, stab.basis_row(b)));
          CHECK(vec_dot(mu.coords, br.coords) == 0);
        }
      const auto rep = analyze_point(entry.algebra, mu);
      CHECK(rep.orbit_dim % 2 == 0);
    }
  }
}

TEST_CASE("duflo strata: x4 = 0 stratum has abelian 2-dim stabilizers, x4 != 0 is regular") {
  const auto duflo = catalog_make("duflo");
  SplitMix64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    // On the hypersurface x4 = 0 with (x2, x3) != 0.
    RatVec on{rng.next_rat(100), rng.next_rat(100), rng.next_rat(100), Rat(0)};
    if (on[1] == 0 && on[2] == 0) on[1] = 1;
    const auto rep = analyze_point(duflo.algebra, Vec(Space::Dual, on));
    CHECK(rep.dim_stabilizer == 2);
    CHECK(rep.type == StabilizerType::Abelian);

    // Off the hypersurface the Poisson tensor is invertible: open orbits,
    // trivial stabilizers.
    RatVec off{rng.next_rat(100), rng.next_rat(100), rng.next_rat(100), Rat(0)};
    Rat x4 = rng.next_rat(100);
    if (x4 == 0) x4 = 1;
    off[3] = x4;
    CHECK(stabilizer(duflo.algebra, Vec(Space::Dual, off)).dim() == 0);
  }
}

TEST_CASE("regular points have abelian stabilizers") {
  SplitMix64 rng(2024);
  for (const char* name : {"gl", "sl", "so"}) {
    const auto entry = catalog_make(name, 3);
    const std::size_t ind = generic_corank(entry.algebra, 1);
    for (int trial = 0; trial < 10; ++trial) {
      RatVec c(entry.algebra.dim());
      for (auto& x : c) x = rng.next_rat(1000);
      const Vec mu(Space::Dual, c);
      const auto stab = stabilizer(entry.algebra, mu);
      if (stab.dim() != ind) continue;  // non-regular sample (probability ~0)
      CHECK(classify_stabilizer_type(entry.algebra, stab) == StabilizerType::Abelian);
    }
  }
}
