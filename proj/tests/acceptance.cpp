// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "liestrata/batch.hpp"
#include "liestrata/catalog.hpp"
#include "liestrata/errors.hpp"
#include "liestrata/estimator.hpp"
#include "liestrata/matrixlie.hpp"
#include "liestrata/stabilizer.hpp"
#include "liestrata/strata.hpp"

using namespace liestrata;

namespace {

int failures = 0;

struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

void run_criterion(int number, const std::string& name,
                   const std::function<void(Checker&)>& body) {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d: %s  (%.1fs)  %s\n", number, c.ok ? "PASS" : "FAIL", secs,
              name.c_str());
  if (!c.ok) {
    std::printf("             %s\n", c.detail.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

RatMatrix diag_of_pattern(const std::vector<int>& pattern) {
  std::size_t n = 0;
  for (int k : pattern) n += static_cast<std::size_t>(k);
  RatMatrix m(n, n);
  std::size_t pos = 0;
  for (std::size_t g = 0; g < pattern.size(); ++g)
    for (int i = 0; i < pattern[g]; ++i) m.at(pos, pos) = Rat(static_cast<long>(g + 1)), ++pos;
  return m;
}

// --------------------------------------------------------------------------
// 1. Diagonal multiplicity patterns of gl(n), n <= 8: the stabilizer is a
//    product of blocks, its abelianization has one dimension per block,
//    and the family inequality is tight at these points.
void criterion1(Checker& c) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const MatrixRealization R = make_gl(n);
    const auto patterns = partitions_of(static_cast<int>(n));
    std::vector<std::string> problems(patterns.size());
    for_index(patterns.size(), ExecPolicy::Parallel, [&](std::size_t idx) {
      const auto& pattern = patterns[idx];
      const std::size_t s = pattern.size();
      const RatMatrix m = diag_of_pattern(pattern);
      const Vec mu = R.covector_of_matrix(m);
      const StabilizerReport rep = analyze_point(R.algebra(), mu);
      if (rep.dim_stabilizer - rep.dim_derived != s) {
        problems[idx] = "abelianization dimension != s for gl(" + std::to_string(n) + ")";
        return;
      }
      const Subspace tangent = sheet_tangent_semisimple(R, m);
      const InequalityReport ineq =
          inequality_report(R.algebra(), mu, static_cast<long>(tangent.dim()));
      if (!ineq.holds || !ineq.equality)
        problems[idx] = "inequality slack nonzero for gl(" + std::to_string(n) + ")";
    });
    for (const auto& p : problems)
      if (!p.empty()) c.expect(false, p);
  }
}

// --------------------------------------------------------------------------
// 2. Exact-zero tangency pairings: random nilpotent coadjoint flows per
//    catalog algebra, every eigenvalue-deformation curve of gl(3)/sl(3),
//    and one-sided sampling.
Vec sample_nilpotent_direction(const CatalogEntry& entry, SplitMix64& rng) {
  const LieAlgebra& L = entry.algebra;
  const std::string& name = entry.name;
  if (name == "gl" || name == "sl" || name == "sp") {
    const auto& R = *entry.realization;
    const std::size_t m = R.matrix_size();
    RatMatrix mat(m, m);
    if (name == "sp") {
      const std::size_t half = m / 2;
      // [[A, B], [0, -A^T]] with A strictly upper and B symmetric.
      for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = i + 1; j < half; ++j) {
          const Rat a = rng.next_rat(5);
          mat.at(i, j) = a;
          mat.at(half + j, half + i) = -a;
        }
      for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = i; j < half; ++j) {
          const Rat b = rng.next_rat(5);
          mat.at(i, half + j) = b;
          mat.at(j, half + i) = b;
        }
    } else {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) mat.at(i, j) = rng.next_rat(5);
    }
    return Vec(Space::Alg, entry.realization->coords_of_matrix(mat).value());
  }
  if (name == "heisenberg") {
    RatVec v(L.dim());
    for (auto& x : v) x = rng.next_rat(9);
    return Vec(Space::Alg, v);  // every element of h_n has nilpotent ad
  }
  if (name == "aff1") {
    RatVec v(2, Rat(0));
    v[1] = rng.next_rat(9);
    if (v[1] == 0) v[1] = 1;
    return Vec(Space::Alg, v);
  }
  if (name == "duflo") {
    RatVec v(4, Rat(0));
    for (std::size_t i = 1; i < 4; ++i) v[i] = rng.next_rat(9);
    return Vec(Space::Alg, v);  // the nilradical span{e2,e3,e4}
  }
  throw input_error("no nilpotent sampler for " + name);
}

void criterion2(Checker& c) {
  // (a) 50 exact coadjoint flows with nilpotent directions per algebra.
  // su(n)/so(n) contain no nonzero elements with nilpotent ad, so the
  // nilpotent-direction family is empty there.
  const std::vector<std::pair<std::string, long>> algebras = {
      {"gl", 2}, {"gl", 3}, {"sl", 2}, {"sl", 3}, {"sp", 2},
      {"heisenberg", 3}, {"heisenberg", 5}, {"aff1", 0}, {"duflo", 0}};
  const std::vector<Rat> two_sided = {Rat(0), Rat(1, 3), Rat(-2, 7), Rat(5)};
  for (const auto& [name, n] : algebras) {
    const CatalogEntry entry = catalog_make(name, n);
    std::vector<std::string> problems(50);
    for_index(50, ExecPolicy::Parallel, [&](std::size_t trial) {
      SplitMix64 rng(derive_seed(1000 + n, trial));
      RatVec coords(entry.algebra.dim());
      for (auto& x : coords) x = rng.next_rat(50);
      const Vec mu(Space::Dual, coords);
      const Vec a = sample_nilpotent_direction(entry, rng);
      const auto order = coadjoint_nilpotency_order(entry.algebra, a);
      if (!order) {
        problems[trial] = "sampled direction not nilpotent in " + name;
        return;
      }
      const Curve gamma = coadjoint_curve(entry.algebra, mu, a, *order - 1);
      const Prop1Report rep = verify_prop1(entry.algebra, gamma, two_sided);
      if (!rep.all_zero) problems[trial] = "nonzero pairing in " + name;
    });
    for (const auto& p : problems)
      if (!p.empty()) c.expect(false, p);
  }

  // (b) every eigenvalue-deformation curve of gl(3) and sl(3), and
  // (c) the same curves sampled one-sided at t > 0 only. Samples stay
  // inside (-1/2, 1/2) so no two deformed eigenvalues collide.
  const std::vector<Rat> eig_samples = {Rat(0), Rat(1, 3), Rat(-2, 7), Rat(1, 5)};
  const std::vector<Rat> positive = {Rat(1, 7), Rat(1, 3), Rat(2, 5)};
  struct EigCurve {
    bool sl;
    std::array<Rat, 3> base;
    std::array<Rat, 3> dir;
  };
  std::vector<EigCurve> curves;
  // gl(3) patterns: (3), (2,1), (1,1,1) with a direction basis each.
  curves.push_back({false, {Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(1)}});
  curves.push_back({false, {Rat(1), Rat(1), Rat(2)}, {Rat(1), Rat(1), Rat(0)}});
  curves.push_back({false, {Rat(1), Rat(1), Rat(2)}, {Rat(0), Rat(0), Rat(1)}});
  curves.push_back({false, {Rat(1), Rat(1), Rat(2)}, {Rat(1), Rat(1), Rat(1)}});
  curves.push_back({false, {Rat(1), Rat(2), Rat(5)}, {Rat(1), Rat(0), Rat(0)}});
  curves.push_back({false, {Rat(1), Rat(2), Rat(5)}, {Rat(0), Rat(1), Rat(0)}});
  curves.push_back({false, {Rat(1), Rat(2), Rat(5)}, {Rat(0), Rat(0), Rat(1)}});
  // sl(3) patterns: (2,1) and (1,1,1) with traceless directions.
  curves.push_back({true, {Rat(1), Rat(1), Rat(-2)}, {Rat(1), Rat(1), Rat(-2)}});
  curves.push_back({true, {Rat(1), Rat(2), Rat(-3)}, {Rat(1), Rat(-1), Rat(0)}});
  curves.push_back({true, {Rat(1), Rat(2), Rat(-3)}, {Rat(0), Rat(1), Rat(-1)}});
  for (const auto& ec : curves) {
    const CatalogEntry entry = catalog_make(ec.sl ? "sl" : "gl", 3);
    const auto& R = *entry.realization;
    RatMatrix base(3, 3), dir(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      base.at(i, i) = ec.base[i];
      dir.at(i, i) = ec.dir[i];
    }
    Curve gamma;
    gamma.coeffs.push_back(R.covector_of_matrix(base));
    gamma.coeffs.push_back(R.covector_of_matrix(dir));
    const Prop1Report rep = verify_prop1(entry.algebra, gamma, eig_samples);
    c.expect(rep.all_zero, "eigenvalue curve pairing nonzero");
    const Prop1Report one_sided = verify_prop1(entry.algebra, gamma, positive);
    c.expect(one_sided.all_zero, "one-sided curve pairing nonzero");
  }
}

// --------------------------------------------------------------------------
// 3. The duflo algebra: abelian 2-dim stabilizer on the singular
//    hypersurface, D(x) = x4, estimated stratum dimension 3, and the
//    strict inequality witnessing non-linearizability.
void criterion3(Checker& c) {
  const CatalogEntry duflo = catalog_make("duflo");
  const Vec mu(Space::Dual, {Rat(0), Rat(1), Rat(0), Rat(0)});

  const StabilizerReport rep = analyze_point(duflo.algebra, mu);
  c.expect(rep.dim_stabilizer == 2, "stabilizer dimension != 2");
  c.expect(rep.type == StabilizerType::Abelian, "stabilizer not abelian");

  const auto D = singular_polynomial(duflo.algebra);
  c.expect(D.has_value(), "no singular hypersurface found");
  if (D) c.expect(*D == Poly::var(4, 3), "singular polynomial is not x4 up to scalar");

  EstimatorConfig cfg;  // spec defaults: tol 1e-6, radius 1e-3, 64 samples
  const EstimateResult est = estimate_stratum_dim(duflo.algebra, mu, cfg);
  c.expect(est.dim_estimate == 3,
           "estimated stratum dimension " + std::to_string(est.dim_estimate) + " != 3");

  const InequalityReport ineq = inequality_report(duflo.algebra, mu, 3, false);
  c.expect(ineq.holds && ineq.slack == 1 && !ineq.equality,
           "inequality not strict with slack 1");
}

// --------------------------------------------------------------------------
// 4. Largest-Jordan-block identity for all partitions of m <= 7.
void criterion4(Checker& c) {
  for (std::size_t m = 1; m <= 7; ++m)
    for (const auto& row : nilpotent_block_identity(m))
      c.expect(row.identity_holds, "identity fails at m=" + std::to_string(m));
}

// --------------------------------------------------------------------------
// 5. SheetEq for every Jordan type of sl(n), n <= 6, with agreement of the
//    three equivalent statements.
void criterion5(Checker& c) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const MatrixRealization R = make_sl(n);
    const auto types = sl_jordan_types(n);
    std::vector<std::string> problems(types.size());
    for_index(types.size(), ExecPolicy::Parallel, [&](std::size_t idx) {
      const RatMatrix mu = jordan_matrix_of_type(types[idx]);
      const Subspace tangent = sheet_tangent_sl(R, mu);
      const SheetReport rep = check_sheet_eq(R, mu, tangent);
      if (!rep.eq_subspace || !rep.orthogonal || !rep.statements_agree)
        problems[idx] = "sheetEq fails for sl(" + std::to_string(n) + ") type " +
                        types[idx].str();
    });
    for (const auto& p : problems)
      if (!p.empty()) c.expect(false, p);
  }
}

// --------------------------------------------------------------------------
// 6. Compact corollary: su(2), su(3), so(3), so(4) at random rational
//    points (all semisimple).
void criterion6(Checker& c) {
  const std::vector<std::pair<std::string, long>> algebras = {
      {"su", 2}, {"su", 3}, {"so", 3}, {"so", 4}};
  for (const auto& [name, n] : algebras) {
    const CatalogEntry entry = catalog_make(name, n);
    const auto& R = *entry.realization;
    std::vector<std::string> problems(20);
    for_index(20, ExecPolicy::Parallel, [&](std::size_t trial) {
      SplitMix64 rng(derive_seed(600 + n, trial));
      RatVec coords(entry.algebra.dim());
      for (auto& x : coords) x = rng.next_rat(20);
      const RatMatrix m = R.embed(coords);
      const Subspace tangent = sheet_tangent_semisimple(R, m);
      const SheetReport rep = check_sheet_eq(R, m, tangent);
      if (!rep.eq_subspace || !rep.statements_agree)
        problems[trial] = "sheetEq fails for " + name + "(" + std::to_string(n) + ")";
    });
    for (const auto& p : problems)
      if (!p.empty()) c.expect(false, p);
  }
}

// --------------------------------------------------------------------------
// 7. Oracle equivalence: the combinatorial centralizer dimension equals the
//    kernel computation for every Jordan type up to n = 7.
void criterion7(Checker& c) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const MatrixRealization R = make_gl(n);
    const auto types = n == 1 ? std::vector<JordanType>{jordan_type(RatMatrix::identity(1))}
                              : sl_jordan_types(n);
    std::vector<std::string> problems(types.size());
    for_index(types.size(), ExecPolicy::Parallel, [&](std::size_t idx) {
      const RatMatrix mu = jordan_matrix_of_type(types[idx]);
      if (centralizer_dim_from_type(types[idx]) != centralizer(R, mu).dim())
        problems[idx] = "formula/kernel mismatch at n=" + std::to_string(n) + " type " +
                        types[idx].str();
    });
    for (const auto& p : problems)
      if (!p.empty()) c.expect(false, p);
  }
}

// --------------------------------------------------------------------------
// 8. Index values, stable across three seeds.
void criterion8(Checker& c) {
  for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
    for (long n = 1; n <= 6; ++n)
      c.expect(compute_index(catalog_make("gl", n).algebra, seed).ind ==
                   static_cast<std::size_t>(n),
               "gl(" + std::to_string(n) + ") index != n (seed " + std::to_string(seed) + ")");
    for (long n = 2; n <= 6; ++n)
      c.expect(compute_index(catalog_make("sl", n).algebra, seed).ind ==
                   static_cast<std::size_t>(n - 1),
               "sl(" + std::to_string(n) + ") index != n-1 (seed " + std::to_string(seed) + ")");
    c.expect(compute_index(catalog_make("heisenberg", 3).algebra, seed).ind == 1,
             "h3 index != 1 (seed " + std::to_string(seed) + ")");
    c.expect(compute_index(catalog_make("aff1").algebra, seed).ind == 0,
             "aff(1) index != 0 (seed " + std::to_string(seed) + ")");
    // Stated expectation: index 2. The computed generic corank of the
    // duflo tensor is 0 (its determinant is 4*x4^4, a nonzero
    // polynomial, so B(x) is invertible at generic points); the value 2
    // is the corank on the singular hypersurface x4 = 0, not the
    // generic one. Kept as stated rather than loosened.
    const std::size_t duflo_ind = compute_index(catalog_make("duflo").algebra, seed).ind;
    c.expect(duflo_ind == 2, "duflo index expected 2, computed " +
                                 std::to_string(duflo_ind) +
                                 " (det B(x) = 4*x4^4 != 0 makes generic corank 0; "
                                 "2 is the corank on the hypersurface x4 = 0)");
  }
}

// --------------------------------------------------------------------------
// 9. CLI determinism: identical seed, byte-identical JSON.
void criterion9(Checker& c) {
  const char* cli = std::getenv("LIESTRATA_CLI");
  if (!cli) {
    c.expect(false, "LIESTRATA_CLI not set");
    return;
  }
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::vector<std::string> commands = {
      "analyze --catalog duflo --point 0,1,0,0 --seed 9 --json-out ",
      "index --catalog gl --n 4 --seed 9 --json-out ",
      "sheet-scan --max-n 3 --seed 9 --json-out ",
      "inequalities --catalog duflo --point 0,1,0,0 --estimate --seed 9 --json-out ",
      "nilpotent-table --max-n 5 --seed 9 --json-out ",
  };
  for (const auto& cmd : commands) {
    const std::string f1 = "/tmp/liestrata_acc_1.json", f2 = "/tmp/liestrata_acc_2.json";
    const std::string full1 = std::string(cli) + " " + cmd + f1 + " > /dev/null 2>&1";
    const std::string full2 = std::string(cli) + " " + cmd + f2 + " > /dev/null 2>&1";
    c.expect(std::system(full1.c_str()) == 0, "command failed: " + cmd);
    c.expect(std::system(full2.c_str()) == 0, "command failed: " + cmd);
    const std::string a = slurp(f1), b = slurp(f2);
    c.expect(!a.empty() && a == b, "output differs between runs: " + cmd);
  }
}

}  // namespace

int main() {
  run_criterion(1, "gl(n) diagonal patterns: abelianization = s, tight inequality (n <= 8)",
                criterion1);
  run_criterion(2, "exact-zero tangency pairings (coadjoint, eigenvalue, one-sided curves)",
                criterion2);
  run_criterion(3, "duflo point: abelian stabilizer, D = x4, estimate 3, strict slack 1",
                criterion3);
  run_criterion(4, "largest-Jordan-block identity, all partitions of m <= 7", criterion4);
  run_criterion(5, "sheetEq for every Jordan type of sl(n), n <= 6", criterion5);
  run_criterion(6, "compact algebras: sheetEq at 20 random points each", criterion6);
  run_criterion(7, "centralizer dimension: formula vs kernel, n <= 7", criterion7);
  run_criterion(8, "index values across three seeds", criterion8);
  run_criterion(9, "CLI determinism: byte-identical JSON per seed", criterion9);

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
