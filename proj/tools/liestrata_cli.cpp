// liestrata: stabilizers, strata, and sheets of finite-dimensional Lie
// algebras over exact rationals.
//
// Subcommands: analyze, verify-prop1, inequalities, index, sheet-scan,
// check-sheeteq, nilpotent-table, catalog.
// Exit codes: 0 ok, 2 input error, 3 internal invariant violation,
// 4 estimator non-convergence.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "liestrata/catalog.hpp"
#include "liestrata/errors.hpp"
#include "liestrata/estimator.hpp"
#include "liestrata/matrixlie.hpp"
#include "liestrata/report.hpp"
#include "liestrata/stabilizer.hpp"
#include "liestrata/strata.hpp"

using namespace liestrata;

namespace {

struct GlobalOpts {
  std::string catalog_name;
  long n = 0;
  std::string algebra_json_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool max_n_given = false;
  std::string json_out;
  double tol = 1e-6;
  long max_n = 4;
};

CatalogEntry load_algebra(const GlobalOpts& g) {
  if (!g.algebra_json_path.empty()) {
    std::ifstream in(g.algebra_json_path);
    if (!in) throw input_error("cannot open " + g.algebra_json_path);
    std::stringstream ss;
    ss << in.rdbuf();
    CatalogEntry e;
    e.name = g.algebra_json_path;
    e.algebra = algebra_from_json(ss.str());
    return e;
  }
  if (g.catalog_name.empty())
    throw input_error("specify an algebra with --catalog or --algebra-json");
  return catalog_make(g.catalog_name, g.n);
}

void emit(const GlobalOpts& g, Json& payload, std::uint64_t seed) {
  payload["seed"] = seed;
  const std::string text = dump_canonical(payload);
  if (!g.json_out.empty()) {
    if (g.json_out == "-") {
      std::cout << text;
    } else {
      std::ofstream out(g.json_out, std::ios::binary);
      if (!out) throw input_error("cannot write " + g.json_out);
      out << text;
    }
  }
}

RatMatrix parse_matrix_point(const std::string& spec, std::size_t msize) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw input_error("matrix point must look like diag:..., jordan:... or mat:...");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "diag") {
    const auto entries = rat_parse_list(body);
    if (entries.size() != msize)
      throw input_error("diag: expected " + std::to_string(msize) + " entries");
    RatMatrix m(msize, msize);
    for (std::size_t i = 0; i < msize; ++i) m.at(i, i) = entries[i];
    return m;
  }
  if (kind == "jordan") {
    JordanType t;
    std::stringstream blocks(body);
    std::string block;
    while (std::getline(blocks, block, ';')) {
      const auto eq = block.find('=');
      if (eq == std::string::npos) throw input_error("jordan: blocks look like lambda=p1,p2");
      JordanType::EigenBlock eb;
      eb.eigenvalue = rat_parse(block.substr(0, eq));
      for (const auto& p : rat_parse_list(block.substr(eq + 1))) {
        if (p.get_den() != 1 || p <= 0) throw input_error("jordan: parts are positive integers");
        eb.partition.push_back(static_cast<int>(p.get_num().get_si()));
      }
      std::sort(eb.partition.rbegin(), eb.partition.rend());
      t.blocks.push_back(std::move(eb));
    }
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const auto& a, const auto& b) { return a.eigenvalue < b.eigenvalue; });
    for (std::size_t i = 0; i + 1 < t.blocks.size(); ++i)
      if (t.blocks[i].eigenvalue == t.blocks[i + 1].eigenvalue)
        throw input_error("jordan: repeated eigenvalue");
    if (t.matrix_size() != msize)
      throw input_error("jordan: sizes sum to " + std::to_string(t.matrix_size()) +
                        ", expected " + std::to_string(msize));
    return jordan_matrix_of_type(t);
  }
  if (kind == "mat") {
    const auto entries = rat_parse_list(body);
    if (entries.size() != msize * msize)
      throw input_error("mat: expected " + std::to_string(msize * msize) +
                        " row-major entries");
    RatMatrix m(msize, msize);
    for (std::size_t i = 0; i < msize; ++i)
      for (std::size_t j = 0; j < msize; ++j) m.at(i, j) = entries[i * msize + j];
    return m;
  }
  throw input_error("unknown matrix point kind '" + kind + "'");
}

/// Affine entry "c", "c+kt", "c-kt", "kt", "t", "-t".
std::pair<Rat, Rat> parse_affine(const std::string& s) {
  const auto tpos = s.find('t');
  if (tpos == std::string::npos) return {rat_parse(s), Rat(0)};
  if (tpos + 1 != s.size()) throw input_error("bad curve entry '" + s + "'");
  std::string head = s.substr(0, tpos);
  if (head.empty()) return {Rat(0), Rat(1)};
  if (head == "-") return {Rat(0), Rat(-1)};
  // Find the +/- separating constant from coefficient (not at index 0).
  std::size_t sep = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      sep = i;
      break;
    }
  }
  if (sep == std::string::npos) return {Rat(0), rat_parse(head)};
  const Rat c = rat_parse(head.substr(0, sep));
  std::string coef = head.substr(sep + 1);
  if (coef.empty()) coef = "1";
  Rat k = rat_parse(coef);
  if (head[sep] == '-') k = -k;
  return {c, k};
}

Curve parse_curve(const CatalogEntry& entry, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw input_error("curve must look like eig:..., coad:... or file:...");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "eig") {
    if (!entry.realization)
      throw input_error("eig curves need a matrix realization");
    const auto& R = *entry.realization;
    std::vector<std::string> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != R.matrix_size())
      throw input_error("eig: expected " + std::to_string(R.matrix_size()) + " entries");
    RatMatrix base(R.matrix_size(), R.matrix_size());
    RatMatrix dir(R.matrix_size(), R.matrix_size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto [c, k] = parse_affine(parts[i]);
      base.at(i, i) = c;
      dir.at(i, i) = k;
    }
    Curve curve;
    curve.coeffs.push_back(R.covector_of_matrix(base));
    curve.coeffs.push_back(R.covector_of_matrix(dir));
    return curve;
  }
  if (kind == "coad") {
    // coad:<direction coords>[:degree]
    std::string coords = body;
    std::optional<std::size_t> degree;
    const auto second = body.find(':');
    if (second != std::string::npos) {
      coords = body.substr(0, second);
      degree = std::stoul(body.substr(second + 1));
    }
    throw input_error("coad curves also need --point; use verify-prop1 --curve coad:... "
                      "together with --point (direction '" + coords + "')");
  }
  if (kind == "file") {
    std::ifstream in(body);
    if (!in) throw input_error("cannot open " + body);
    nlohmann::json j;
    in >> j;
    Curve curve;
    for (const auto& coeff : j.at("coeffs")) {
      RatVec v;
      for (const auto& s : coeff) v.push_back(rat_parse(s.get<std::string>()));
      curve.coeffs.emplace_back(Space::Dual, std::move(v));
    }
    if (curve.coeffs.empty()) throw input_error("curve file has no coefficients");
    return curve;
  }
  throw input_error("unknown curve kind '" + kind + "'");
}

Vec point_from_flags(const CatalogEntry& entry, const std::string& point,
                     const std::string& matrix_point, RatMatrix* matrix_out = nullptr) {
  if (!point.empty() && !matrix_point.empty())
    throw input_error("give either --point or --matrix-point, not both");
  if (!point.empty()) {
    const auto coords = rat_parse_list(point);
    if (coords.size() != entry.algebra.dim())
      throw input_error("point has " + std::to_string(coords.size()) +
                        " coordinates, algebra dimension is " +
                        std::to_string(entry.algebra.dim()));
    return Vec(Space::Dual, coords);
  }
  if (!matrix_point.empty()) {
    if (!entry.realization)
      throw input_error("--matrix-point needs an algebra with a matrix realization");
    const auto& R = *entry.realization;
    RatMatrix m = parse_matrix_point(matrix_point, R.matrix_size());
    if (!R.coords_of_matrix(m))
      throw input_error("matrix lies outside the realized algebra");
    if (matrix_out) *matrix_out = m;
    return R.covector_of_matrix(m);
  }
  throw input_error("a point is required (--point or --matrix-point)");
}

int run_analyze(const GlobalOpts& g, const std::string& point,
                const std::string& matrix_point, bool singular_poly) {
  const std::uint64_t seed = resolve_seed(g.seed_given, g.seed);
  const CatalogEntry entry = load_algebra(g);
  RatMatrix m;
  const Vec mu = point_from_flags(entry, point, matrix_point, &m);
  const StabilizerReport rep = analyze_point(entry.algebra, mu);

  std::cout << "algebra: " << entry.name;
  if (entry.param) std::cout << "(" << entry.param << ")";
  std::cout << "  dim " << entry.algebra.dim() << "\n";
  if (!matrix_point.empty()) {
    std::cout << "matrix point (trace-form identification applied):\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::cout << "  ";
      for (std::size_t j = 0; j < m.cols(); ++j) std::cout << rat_str(m.at(i, j)) << " ";
      std::cout << "\n";
    }
  }
  std::cout << "covector: " << rat_str_list(mu.coords) << "\n";
  std::cout << "dim stabilizer:    " << rep.dim_stabilizer << "\n";
  std::cout << "dim derived:       " << rep.dim_derived << "\n";
  std::cout << "orbit dimension:   " << rep.orbit_dim << "\n";
  std::cout << "stabilizer type:   " << stabilizer_type_name(rep.type) << "\n";

  Json j;
  j["command"] = "analyze";
  j["algebra"] = entry.name;
  j["report"] = json_of_stabilizer_report(rep);
  if (!matrix_point.empty()) j["matrix_point"] = json_of_matrix(m);
  if (singular_poly) {
    Json sp;
    try {
      const auto D = singular_polynomial(entry.algebra, 8, seed);
      if (D) {
        std::vector<std::string> coords;
        for (std::size_t i = 0; i < entry.algebra.dim(); ++i)
          coords.push_back("x" + std::to_string(i + 1));
        sp["hypersurface"] = true;
        sp["polynomial"] = D->str(coords);
        std::cout << "singular set:      D = " << sp["polynomial"].get<std::string>()
                  << "\n";
      } else {
        sp["hypersurface"] = false;
        std::cout << "singular set:      codimension >= 2 (no hypersurface part)\n";
      }
    } catch (const input_error&) {
      sp["computed"] = false;
      std::cout << "singular set:      not computed (dimension bound exceeded)\n";
    }
    j["singular_polynomial"] = sp;
  }
  emit(g, j, seed);
  return 0;
}

int run_verify_prop1(const GlobalOpts& g, const std::string& point,
                     const std::string& matrix_point, const std::string& curve_spec,
                     const std::string& samples_spec, long coad_degree) {
  const std::uint64_t seed = resolve_seed(g.seed_given, g.seed);
  const CatalogEntry entry = load_algebra(g);

  Curve curve;
  if (curve_spec.rfind("coad:", 0) == 0) {
    const Vec mu = point_from_flags(entry, point, matrix_point);
    std::string body = curve_spec.substr(5);
    const auto extra = body.find(':');
    std::optional<std::size_t> degree;
    if (extra != std::string::npos) {
      degree = std::stoul(body.substr(extra + 1));
      body = body.substr(0, extra);
    }
    const auto coords = rat_parse_list(body);
    if (coords.size() != entry.algebra.dim())
      throw input_error("coad direction has the wrong dimension");
    const Vec a(Space::Alg, coords);
    if (!degree) {
      const auto order = coadjoint_nilpotency_order(entry.algebra, a);
      if (!order)
        throw input_error(
            "coadjoint direction is not nilpotent; give an explicit degree "
            "(coad:coords:degree)");
      degree = *order - 1;
    }
    if (coad_degree >= 0) degree = static_cast<std::size_t>(coad_degree);
    curve = coadjoint_curve(entry.algebra, mu, a, *degree);
  } else {
    curve = parse_curve(entry, curve_spec);
  }

  std::vector<Rat> samples;
  for (const auto& s : rat_parse_list(samples_spec)) samples.push_back(s);

  const Prop1Report rep = verify_prop1(entry.algebra, curve, samples);
  std::cout << "stabilizer dim at basepoint: " << rep.stabilizer_dim << "\n";
  std::cout << "derived dim:                 " << rep.derived_dim << "\n";
  std::cout << "in-stratum samples:          " << rep.samples.size() << "\n";
  std::cout << "pairings all zero:           " << (rep.all_zero ? "yes" : "NO")
            << "  (" << rep.pairings.size() << " pairings)\n";

  Json j;
  j["command"] = "verify-prop1";
  j["algebra"] = entry.name;
  j["report"] = json_of_prop1_report(rep);
  emit(g, j, seed);
  return rep.all_zero ? 0 : 3;
}

int run_inequalities(const GlobalOpts& g, const std::string& point,
                     const std::string& matrix_point, long stratum_dim_flag,
                     bool closed_form, bool estimate, double radius, long est_samples) {
  const std::uint64_t seed = resolve_seed(g.seed_given, g.seed);
  const CatalogEntry entry = load_algebra(g);
  RatMatrix m;
  const Vec mu = point_from_flags(entry, point, matrix_point, &m);

  long stratum_dim = 0;
  bool exact = true;
  std::string source;
  if (stratum_dim_flag >= 0) {
    stratum_dim = stratum_dim_flag;
    source = "user";
  } else if (closed_form) {
    if (matrix_point.empty())
      throw input_error("--closed-form needs --matrix-point (sheet machinery)");
    const auto& R = *entry.realization;
    Subspace tangent;
    if (R.kind() == RealizationKind::GL || R.kind() == RealizationKind::SL)
      tangent = sheet_tangent_sl(R, m);
    else
      tangent = sheet_tangent_semisimple(R, m);
    stratum_dim = static_cast<long>(tangent.dim());
    source = dim_provenance_name(
        (R.kind() == RealizationKind::GL || R.kind() == RealizationKind::SL)
            ? DimProvenance::ClosedFormSl
            : DimProvenance::Semisimple);
  } else if (estimate) {
    EstimatorConfig cfg;
    cfg.seed = seed;
    cfg.tol = g.tol;
    cfg.radius = radius;
    cfg.samples = static_cast<std::size_t>(est_samples);
    const auto res = estimate_stratum_dim(entry.algebra, mu, cfg);
    stratum_dim = res.dim_estimate;
    exact = false;
    source = dim_provenance_name(DimProvenance::Estimated);
  } else {
    throw input_error("choose one of --stratum-dim, --closed-form, --estimate");
  }

  const InequalityReport rep = inequality_report(entry.algebra, mu, stratum_dim, exact);
  std::cout << "stratum dim (" << source << "): " << rep.stratum_dim
            << (exact ? " [exact]" : " [estimate]") << "\n";
  std::cout << "codim:        " << rep.codim << "\n";
  std::cout << "dim derived:  " << rep.dim_derived << "\n";
  std::cout << "slack:        " << rep.slack << (rep.equality ? "  (EQUALITY)" : "") << "\n";
  std::cout << "inequality:   " << (rep.holds ? "holds" : "VIOLATED") << "\n";

  Json j;
  j["command"] = "inequalities";
  j["algebra"] = entry.name;
  j["stratum_dim_source"] = source;
  j["report"] = json_of_inequality_report(rep);
  emit(g, j, seed);
  return rep.holds ? 0 : 3;
}

int run_index(const GlobalOpts& g) {
  const std::uint64_t seed = resolve_seed(g.seed_given, g.seed);
  const CatalogEntry entry = load_algebra(g);
  const IndexResult res = compute_index(entry.algebra, seed);
  std::cout << "index of " << entry.name << ": " << res.ind << "  ("
            << res.witnesses.size() << " witnesses agree)\n";
  Json j;
  j["command"] = "index";
  j["algebra"] = entry.name;
  j["index"] = fig_exact(static_cast<long>(res.ind));
  Json w = Json::array();
  for (const auto& [pt, corank] : res.witnesses) {
    Json e;
    e["point"] = json_of_vec(pt);
    e["corank"] = corank;
    w.push_back(e);
  }
  j["witnesses"] = w;
  emit(g, j, seed);
  return 0;
}

int run_sheet_scan(const GlobalOpts& g) {
  const std::uint64_t seed = resolve_seed(g.seed_given, g.seed);
  if (g.max_n < 2) throw input_error("--max-n must be at least 2");
  Json rows = Json::array();
  std::size_t printed = 0;
  bool all_eq = true;
  std::cout << "  n  type                        dim g^mu  derived  dim O  dim S  sheetEq\n";
  for (long n = 2; n <= g.max_n; ++n) {
    const MatrixRealization R = make_sl(static_cast<std::size_t>(n));
    std::vector<JordanType> types;
    for (const auto& partition : partitions_of(static_cast<int>(n))) {
      JordanType t;
      t.blocks.push_back({Rat(0), partition});
      types.push_back(std::move(t));
    }
    if (n >= 3) {
      // One regular semisimple representative per rank.
      JordanType t;
      Rat sum(0);
      for (long i = 0; i + 1 < n; ++i) {
        t.blocks.push_back({Rat(i + 1), {1}});
        sum += Rat(i + 1);
      }
      t.blocks.push_back({-sum, {1}});
      std::sort(t.blocks.begin(), t.blocks.end(),
                [](const auto& a, const auto& b) { return a.eigenvalue < b.eigenvalue; });
      types.push_back(std::move(t));
    }
    for (const auto& t : types) {
      const RatMatrix mu = jordan_matrix_of_type(t);
      const Subspace tangent = sheet_tangent_sl(R, mu);
      const SheetReport rep = check_sheet_eq(R, mu, tangent);
      all_eq = all_eq && rep.eq_subspace;
      std::ostringstream type_str;
      type_str << t.str();
      std::printf("  %ld  %-26s  %8zu  %7zu  %5zu  %5zu  %s\n", n, type_str.str().c_str(),
                  rep.dim_centralizer, rep.dim_derived, rep.dim_orbit, rep.dim_sheet,
                  rep.eq_subspace ? "true" : "FALSE");
      ++printed;
      Json row;
      row["n"] = n;
      row["type"] = json_of_jordan_type(t);
      row["dim_centralizer"] = fig_exact(static_cast<long>(rep.dim_centralizer));
      row["dim_derived"] = fig_exact(static_cast<long>(rep.dim_derived));
      row["dim_orbit"] = fig_exact(static_cast<long>(rep.dim_orbit));
      row["dim_sheet"] = fig_exact(static_cast<long>(rep.dim_sheet));
      row["sheet_eq"] = rep.eq_subspace;
      rows.push_back(row);
    }
  }
  std::cout << printed << " rows, sheetEq " << (all_eq ? "holds everywhere" : "FAILS")
            << "\n";
  Json j;
  j["command"] = "sheet-scan";
  j["max_n"] = g.max_n;
  j["rows"] = rows;
  j["all_sheet_eq"] = all_eq;
  emit(g, j, seed);
  return all_eq ? 0 : 3;
}

int run_check_sheeteq(const GlobalOpts& g, const std::string& matrix_point,
                      bool force_semisimple) {
  const std::uint64_t seed = resolve_seed(g.seed_given, g.seed);
  const CatalogEntry entry = load_algebra(g);
  if (!entry.realization) throw input_error("check-sheeteq needs a matrix realization");
  const auto& R = *entry.realization;
  if (matrix_point.empty()) throw input_error("check-sheeteq needs --matrix-point");
  const RatMatrix m = parse_matrix_point(matrix_point, R.matrix_size());

  Subspace tangent;
  std::string constructor;
  const bool is_linear_kind =
      R.kind() == RealizationKind::GL || R.kind() == RealizationKind::SL;
  if (force_semisimple || !is_linear_kind) {
    tangent = sheet_tangent_semisimple(R, m);
    constructor = "semisimple";
  } else {
    tangent = sheet_tangent_sl(R, m);
    constructor = "invariant-factor";
  }
  const SheetReport rep = check_sheet_eq(R, m, tangent);
  std::cout << "tangent constructor: " << constructor << "\n";
  std::cout << "dim centralizer:     " << rep.dim_centralizer << "\n";
  std::cout << "dim derived:         " << rep.dim_derived << "\n";
  std::cout << "dim orbit:           " << rep.dim_orbit << "\n";
  std::cout << "dim sheet tangent:   " << rep.dim_sheet << "\n";
  std::cout << "orthogonality:       " << (rep.orthogonal ? "holds" : "FAILS") << "\n";
  std::cout << "sheetEq equality:    " << (rep.eq_subspace ? "holds" : "FAILS") << "\n";
  std::cout << "statements agree:    " << (rep.statements_agree ? "yes" : "NO") << "\n";

  Json j;
  j["command"] = "check-sheeteq";
  j["algebra"] = entry.name;
  j["constructor"] = constructor;
  j["report"] = json_of_sheet_report(rep);
  emit(g, j, seed);
  return rep.statements_agree ? 0 : 3;
}

int run_nilpotent_table(const GlobalOpts& g) {
  const std::uint64_t seed = resolve_seed(g.seed_given, g.seed);
  const long max_m = g.max_n_given ? g.max_n : 7;  // own default bound 7
  if (max_m < 1 || max_m > 9) throw input_error("--max-n must be in [1, 9]");
  Json rows = Json::array();
  bool all_hold = true;
  std::cout << "  m  partition        dim g^nu  derived  difference  largest\n";
  for (long m = 1; m <= max_m; ++m) {
    for (const auto& row : nilpotent_block_identity(static_cast<std::size_t>(m))) {
      std::string part;
      for (std::size_t i = 0; i < row.partition.size(); ++i) {
        if (i) part += ",";
        part += std::to_string(row.partition[i]);
      }
      std::printf("  %ld  %-15s  %8zu  %7zu  %10zu  %7d%s\n", m, part.c_str(),
                  row.dim_centralizer, row.dim_derived,
                  row.dim_centralizer - row.dim_derived, row.largest_part,
                  row.identity_holds ? "" : "  MISMATCH");
      all_hold = all_hold && row.identity_holds;
      Json r;
      r["m"] = m;
      r["partition"] = row.partition;
      r["dim_centralizer"] = fig_exact(static_cast<long>(row.dim_centralizer));
      r["dim_derived"] = fig_exact(static_cast<long>(row.dim_derived));
      r["largest_part"] = row.largest_part;
      r["identity_holds"] = row.identity_holds;
      rows.push_back(r);
    }
  }
  std::cout << (all_hold ? "largest-block identity holds on every row\n"
                         : "MISMATCH detected\n");
  Json j;
  j["command"] = "nilpotent-table";
  j["max_m"] = max_m;
  j["rows"] = rows;
  j["all_hold"] = all_hold;
  emit(g, j, seed);
  return all_hold ? 0 : 3;
}

int run_catalog(const GlobalOpts& g, const std::string& action, const std::string& name) {
  const std::uint64_t seed = resolve_seed(g.seed_given, g.seed);
  if (action == "list") {
    Json j;
    j["command"] = "catalog-list";
    Json names = Json::array();
    for (const auto& n : catalog_names()) {
      std::cout << n << "\n";
      names.push_back(n);
    }
    j["algebras"] = names;
    emit(g, j, seed);
    return 0;
  }
  if (action == "dump") {
    if (name.empty()) throw input_error("catalog dump needs --name");
    const CatalogEntry entry = catalog_make(name, g.n);
    std::cout << algebra_to_json(entry.algebra);
    if (!g.json_out.empty() && g.json_out != "-") {
      std::ofstream out(g.json_out, std::ios::binary);
      out << algebra_to_json(entry.algebra);
    }
    return 0;
  }
  throw input_error("catalog action must be list or dump");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liestrata: exact stabilizers, strata and sheets of Lie algebras"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "random seed (default 0; env LIESTRATA_SEED)")
      ->each([&](const std::string&) { g.seed_given = true; });
  app.add_option("--json-out", g.json_out, "write canonical JSON to this path ('-' = stdout)");
  app.add_option("--tol", g.tol, "estimator relative singular-value cutoff");
  app.add_option("--max-n", g.max_n, "bound for scans/tables")
      ->each([&](const std::string&) { g.max_n_given = true; });
  app.add_option("--catalog", g.catalog_name, "catalog algebra name");
  app.add_option("--n", g.n, "catalog parameter n");
  app.add_option("--algebra-json", g.algebra_json_path, "algebra JSON file");

  std::string point, matrix_point, curve_spec, samples_spec = "0,1/7,1/3";
  bool singular_poly = false, closed_form = false, estimate = false, force_ss = false;
  long stratum_dim_flag = -1, est_samples = 64, coad_degree = -1;
  double radius = 1e-3;
  std::string catalog_action = "list", catalog_name;

  // Global flags may appear after the subcommand name.
  auto with_fallthrough = [](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  auto* analyze =
      with_fallthrough(app.add_subcommand("analyze", "stabilizer analysis of one point"));
  analyze->add_option("--point", point, "covector coordinates a,b,c,...");
  analyze->add_option("--matrix-point", matrix_point, "diag:... | jordan:l=p1,p2;... | mat:...");
  analyze->add_flag("--singular-poly", singular_poly, "also compute the singular-set polynomial");

  auto* prop1 = with_fallthrough(
      app.add_subcommand("verify-prop1", "tangency check along a curve"));
  prop1->add_option("--point", point, "basepoint for coad curves");
  prop1->add_option("--matrix-point", matrix_point, "basepoint as a matrix");
  prop1->add_option("--curve", curve_spec, "eig:1+t,1+t,2 | coad:coords[:deg] | file:path")
      ->required();
  prop1->add_option("--samples", samples_spec, "rational t samples (default 0,1/7,1/3)");
  prop1->add_option("--degree", coad_degree, "truncation degree for coad curves");

  auto* ineq = with_fallthrough(
      app.add_subcommand("inequalities", "codimension inequality report"));
  ineq->add_option("--point", point, "covector coordinates");
  ineq->add_option("--matrix-point", matrix_point, "point as a matrix");
  ineq->add_option("--stratum-dim", stratum_dim_flag, "stratum dimension supplied by hand");
  ineq->add_flag("--closed-form", closed_form, "stratum dimension from the sheet machinery");
  ineq->add_flag("--estimate", estimate, "stratum dimension from the float estimator");
  ineq->add_option("--radius", radius, "estimator perturbation radius");
  ineq->add_option("--est-samples", est_samples, "estimator sample count");

  with_fallthrough(app.add_subcommand("index", "generic corank of the Poisson tensor"));

  with_fallthrough(app.add_subcommand("sheet-scan", "sheet table for sl(2..max-n)"));

  auto* sheeteq = with_fallthrough(
      app.add_subcommand("check-sheeteq", "derived-vs-tangent-perp equality"));
  sheeteq->add_option("--matrix-point", matrix_point, "point as a matrix")->required();
  sheeteq->add_flag("--semisimple", force_ss, "force the semisimple tangent constructor");

  auto* cat = with_fallthrough(app.add_subcommand("catalog", "list or dump built-in algebras"));
  cat->add_option("action", catalog_action, "list | dump");
  cat->add_option("--name", catalog_name, "algebra to dump");

  with_fallthrough(app.add_subcommand("nilpotent-table", "largest-block identity table"));

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("analyze"))
      return run_analyze(g, point, matrix_point, singular_poly);
    if (app.got_subcommand("verify-prop1"))
      return run_verify_prop1(g, point, matrix_point, curve_spec, samples_spec, coad_degree);
    if (app.got_subcommand("inequalities"))
      return run_inequalities(g, point, matrix_point, stratum_dim_flag, closed_form,
                              estimate, radius, est_samples);
    if (app.got_subcommand("index")) return run_index(g);
    if (app.got_subcommand("sheet-scan")) return run_sheet_scan(g);
    if (app.got_subcommand("check-sheeteq"))
      return run_check_sheeteq(g, matrix_point, force_ss);
    if (app.got_subcommand("nilpotent-table")) return run_nilpotent_table(g);
    if (app.got_subcommand("catalog")) return run_catalog(g, catalog_action, catalog_name);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const stratum_exit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const estimator_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const invariant_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
