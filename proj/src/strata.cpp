#include "liestrata/strata.hpp"

#include "liestrata/errors.hpp"
#include "liestrata/random.hpp"

namespace liestrata {

Vec Curve::eval(const Rat& t) const {
  RatVec out(coeffs.front().dim(), Rat(0));
  Rat power(1);
  for (const auto& a : coeffs) {
    for (std::size_t i = 0; i < out.size(); ++i)
      if (a.coords[i] != 0) out[i] += power * a.coords[i];
    power *= t;
  }
  return Vec(Space::Dual, std::move(out));
}

Vec Curve::velocity_at_zero() const {
  if (coeffs.size() < 2)
    return Vec(Space::Dual, RatVec(coeffs.front().dim(), Rat(0)));
  return coeffs[1];
}

const char* dim_provenance_name(DimProvenance p) {
  switch (p) {
    case DimProvenance::ClosedFormSl: return "CLOSED_FORM_SL";
    case DimProvenance::Semisimple: return "SEMISIMPLE";
    case DimProvenance::Estimated: return "ESTIMATED";
  }
  return "ESTIMATED";
}

StratumSpec stratum_spec(const LieAlgebra& L, const Vec& mu) {
  StratumSpec spec;
  spec.mu = mu;
  spec.k = stabilizer(L, mu).dim();
  return spec;
}

bool stratum_membership(const LieAlgebra& L, const Vec& nu, const StratumSpec& spec) {
  return stabilizer(L, nu).dim() == spec.k;
}

std::optional<std::size_t> coadjoint_nilpotency_order(const LieAlgebra& L, const Vec& a) {
  const RatMatrix A = L.coadjoint_generator(a);
  RatMatrix power = A;
  for (std::size_t q = 1; q <= L.dim(); ++q) {
    if (power.is_zero()) return q;
    power = power * A;
  }
  return power.is_zero() ? std::optional<std::size_t>(L.dim() + 1) : std::nullopt;
}

Curve coadjoint_curve(const LieAlgebra& L, const Vec& mu, const Vec& a, std::size_t degree) {
  if (mu.space != Space::Dual) throw input_error("coadjoint curve expects a covector");
  if (a.space != Space::Alg) throw input_error("coadjoint direction must live in g");
  const RatMatrix A = L.coadjoint_generator(a);
  Curve gamma;
  RatVec term = mu.coords;
  gamma.coeffs.emplace_back(Space::Dual, term);
  Rat factorial(1);
  for (std::size_t i = 1; i <= degree; ++i) {
    term = A.apply(term);
    factorial *= Rat(static_cast<long>(i));
    gamma.coeffs.emplace_back(Space::Dual, vec_scale(Rat(1) / factorial, term));
  }
  return gamma;
}

Prop1Report verify_prop1(const LieAlgebra& L, const Curve& gamma,
                         const std::vector<Rat>& samples) {
  if (gamma.coeffs.empty()) throw input_error("empty curve");
  Prop1Report rep;
  rep.samples = samples;

  const Vec mu = gamma.basepoint();
  const Subspace stab = stabilizer(L, mu);
  rep.stabilizer_dim = stab.dim();

  for (const auto& t : samples) {
    const bool inside = stabilizer(L, gamma.eval(t)).dim() == stab.dim();
    rep.in_stratum.push_back(inside);
    if (!inside)
      throw stratum_exit_error(
          rat_str(t), "curve leaves the stratum at t = " + rat_str(t) +
                          " (stabilizer dimension changes), so the tangency "
                          "statement does not apply");
  }

  const Vec velocity = gamma.velocity_at_zero();
  const Subspace derived = derived_subalgebra(L, stab);
  rep.derived_dim = derived.dim();
  rep.all_zero = true;
  for (std::size_t a = 0; a < stab.dim(); ++a)
    for (std::size_t b = a + 1; b < stab.dim(); ++b) {
      const Vec br =
          L.bracket(Vec(Space::Alg, stab.basis_row(a)), Vec(Space::Alg, stab.basis_row(b)));
      const Rat pairing = vec_dot(velocity.coords, br.coords);
      rep.pairings.push_back(pairing);
      if (pairing != 0) rep.all_zero = false;
    }
  return rep;
}

InequalityReport inequality_report(const LieAlgebra& L, const Vec& mu, long stratum_dim,
                                   bool stratum_dim_exact) {
  const StabilizerReport point = analyze_point(L, mu);
  InequalityReport rep;
  rep.dim_alg = L.dim();
  rep.dim_stabilizer = point.dim_stabilizer;
  rep.dim_derived = point.dim_derived;
  rep.orbit_dim = point.orbit_dim;
  rep.stratum_dim = stratum_dim;
  rep.stratum_dim_exact = stratum_dim_exact;
  rep.codim = static_cast<long>(L.dim()) - stratum_dim;
  // dim[g_mu,g_mu] <= codim, and the rewritten family form
  // stratum_dim - orbit_dim <= dim g_mu - dim derived have the same slack.
  rep.slack = rep.codim - static_cast<long>(rep.dim_derived);
  rep.holds = rep.slack >= 0;
  rep.equality = rep.slack == 0;
  return rep;
}

IndexResult compute_index(const LieAlgebra& L, std::uint64_t seed) {
  IndexResult res;
  res.ind = generic_corank(L, seed, &res.witnesses);
  return res;
}

CodimScanReport corollary_codim_scan(const LieAlgebra& L, std::size_t k, std::size_t count,
                                     std::uint64_t seed, ExecPolicy policy) {
  CodimScanReport rep;
  rep.k = k;
  rep.samples = count;
  const auto dims = derived_dim_scan(L, count, seed, policy);
  for (auto d : dims)
    if (d >= k) ++rep.hits;
  rep.frequency = count == 0 ? 0.0 : static_cast<double>(rep.hits) / count;
  return rep;
}

}  // namespace liestrata
