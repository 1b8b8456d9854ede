#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liestrata/algebra.hpp"
#include "liestrata/batch.hpp"
#include "liestrata/stabilizer.hpp"

namespace liestrata {

/// Polynomial path gamma(t) = sum coeffs[i] t^i in g*, with exact
/// coefficients; coeffs[0] is the basepoint.
struct Curve {
  std::vector<Vec> coeffs;  // all Space::Dual, same dimension

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Vec& basepoint() const { return coeffs.front(); }
  Vec eval(const Rat& t) const;
  Vec velocity_at_zero() const;
};

enum class DimProvenance { ClosedFormSl, Semisimple, Estimated };
const char* dim_provenance_name(DimProvenance p);

struct StratumSpec {
  Vec mu;
  std::size_t k = 0;  // dim g_mu at the basepoint
  std::optional<long> known_dim;
  std::optional<DimProvenance> provenance;
};

StratumSpec stratum_spec(const LieAlgebra& L, const Vec& mu);

/// True iff dim g_nu = spec.k, exactly.
bool stratum_membership(const LieAlgebra& L, const Vec& nu, const StratumSpec& spec);

/// Degree-d Taylor truncation of t -> exp(t ad*_a)(mu). Exactly on the
/// coadjoint orbit whenever ad*_a is nilpotent of order <= d.
Curve coadjoint_curve(const LieAlgebra& L, const Vec& mu, const Vec& a, std::size_t degree);

/// Order of nilpotency of ad*_a (smallest q with (ad*_a)^q = 0), or
/// nullopt if not nilpotent.
std::optional<std::size_t> coadjoint_nilpotency_order(const LieAlgebra& L, const Vec& a);

struct Prop1Report {
  std::vector<Rat> samples;
  std::vector<bool> in_stratum;      // per sample (all true on success)
  std::size_t stabilizer_dim = 0;
  std::size_t derived_dim = 0;
  /// <gamma'(0), [e_i(0), e_j(0)]> over basis pairs of the stabilizer.
  std::vector<Rat> pairings;
  bool all_zero = false;
};

/// Verifies the tangency statement: the curve must have constant
/// stabilizer dimension at every sampled t (else stratum_exit_error),
/// and then every pairing of gamma'(0) against brackets of stabilizer
/// basis elements is reported; the theorem says they vanish exactly.
Prop1Report verify_prop1(const LieAlgebra& L, const Curve& gamma,
                         const std::vector<Rat>& samples);

struct InequalityReport {
  std::size_t dim_alg = 0;
  std::size_t dim_stabilizer = 0;
  std::size_t dim_derived = 0;
  std::size_t orbit_dim = 0;
  long stratum_dim = 0;
  bool stratum_dim_exact = true;
  long codim = 0;
  long slack = 0;        // identical for both phrasings of the inequality
  bool holds = false;
  bool equality = false;
};

/// Evaluates dim[g_mu,g_mu] <= codim g*(mu) and the rewritten family
/// form, reporting slack; slack 0 is flagged EQUALITY.
InequalityReport inequality_report(const LieAlgebra& L, const Vec& mu, long stratum_dim,
                                   bool stratum_dim_exact = true);

struct IndexResult {
  std::size_t ind = 0;
  std::vector<std::pair<Vec, std::size_t>> witnesses;  // sampled points, coranks
};

/// ind g = generic corank of the Poisson tensor, sampled at >= 3 random
/// rational points with agreement required.
IndexResult compute_index(const LieAlgebra& L, std::uint64_t seed = 0);

struct CodimScanReport {
  std::size_t k = 0;
  std::size_t samples = 0;
  std::size_t hits = 0;  // samples with dim derived >= k
  double frequency = 0.0;
};

/// Samples random covectors and reports how often dim[g_mu,g_mu] >= k.
/// For k >= 1 the set has positive codimension, so the frequency must
/// be 0; anything else is a red flag.
CodimScanReport corollary_codim_scan(const LieAlgebra& L, std::size_t k, std::size_t count,
                                     std::uint64_t seed = 0,
                                     ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace liestrata
