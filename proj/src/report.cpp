#include "liestrata/report.hpp"

#include <cstdlib>

namespace liestrata {

Json fig_exact(const Rat& value) {
  Json j;
  j["value"] = rat_str(value);
  j["exact"] = true;
  return j;
}

Json fig_exact(long value) {
  Json j;
  j["value"] = value;
  j["exact"] = true;
  return j;
}

Json fig_float(double value) {
  Json j;
  j["value"] = value;
  j["exact"] = false;
  return j;
}

Json json_of_vec(const Vec& v) {
  Json coords = Json::array();
  for (const auto& c : v.coords) coords.push_back(rat_str(c));
  Json j;
  j["space"] = space_name(v.space);
  j["coords"] = coords;
  return j;
}

Json json_of_matrix(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json json_of_subspace(const Subspace& s) {
  Json j;
  j["space"] = space_name(s.tag());
  j["dim"] = s.dim();
  j["basis_rows"] = json_of_matrix(s.basis());
  return j;
}

Json json_of_stabilizer_report(const StabilizerReport& r) {
  Json j;
  j["point"] = json_of_vec(r.mu);
  j["dim_stabilizer"] = fig_exact(static_cast<long>(r.dim_stabilizer));
  j["dim_derived"] = fig_exact(static_cast<long>(r.dim_derived));
  j["orbit_dim"] = fig_exact(static_cast<long>(r.orbit_dim));
  j["stabilizer_type"] = stabilizer_type_name(r.type);
  j["stabilizer"] = json_of_subspace(r.stab);
  j["derived"] = json_of_subspace(r.derived);
  j["center_of_stabilizer"] = json_of_subspace(r.center_of_stabilizer);
  return j;
}

Json json_of_inequality_report(const InequalityReport& r) {
  Json j;
  j["dim_algebra"] = fig_exact(static_cast<long>(r.dim_alg));
  j["dim_stabilizer"] = fig_exact(static_cast<long>(r.dim_stabilizer));
  j["dim_derived"] = fig_exact(static_cast<long>(r.dim_derived));
  j["orbit_dim"] = fig_exact(static_cast<long>(r.orbit_dim));
  Json sd;
  sd["value"] = r.stratum_dim;
  sd["exact"] = r.stratum_dim_exact;
  j["stratum_dim"] = sd;
  j["codim"] = fig_exact(r.codim);
  j["slack"] = fig_exact(r.slack);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  return j;
}

Json json_of_prop1_report(const Prop1Report& r) {
  Json j;
  Json samples = Json::array();
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    Json s;
    s["t"] = rat_str(r.samples[i]);
    s["in_stratum"] = static_cast<bool>(r.in_stratum[i]);
    samples.push_back(s);
  }
  j["samples"] = samples;
  j["stabilizer_dim"] = fig_exact(static_cast<long>(r.stabilizer_dim));
  j["derived_dim"] = fig_exact(static_cast<long>(r.derived_dim));
  Json pairings = Json::array();
  for (const auto& p : r.pairings) pairings.push_back(rat_str(p));
  j["pairings"] = pairings;
  j["all_pairings_zero"] = r.all_zero;
  return j;
}

Json json_of_sheet_report(const SheetReport& r) {
  Json j;
  j["dim_centralizer"] = fig_exact(static_cast<long>(r.dim_centralizer));
  j["dim_derived"] = fig_exact(static_cast<long>(r.dim_derived));
  j["dim_orbit"] = fig_exact(static_cast<long>(r.dim_orbit));
  j["dim_sheet_tangent"] = fig_exact(static_cast<long>(r.dim_sheet));
  j["orthogonal"] = r.orthogonal;
  j["sheet_eq"] = r.eq_subspace;
  j["eq_codim"] = r.eq_codim;
  j["eq_family"] = r.eq_family;
  j["statements_agree"] = r.statements_agree;
  j["tangent"] = json_of_subspace(r.tangent);
  j["derived"] = json_of_subspace(r.derived);
  j["tangent_perp"] = json_of_subspace(r.tangent_perp);
  return j;
}

Json json_of_jordan_type(const JordanType& t) {
  Json blocks = Json::array();
  for (const auto& b : t.blocks) {
    Json e;
    e["lambda"] = rat_str(b.eigenvalue);
    e["partition"] = b.partition;
    blocks.push_back(e);
  }
  Json j;
  j["blocks"] = blocks;
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("LIESTRATA_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 0;
}

}  // namespace liestrata
