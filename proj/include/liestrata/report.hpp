#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "liestrata/matrixlie.hpp"
#include "liestrata/stabilizer.hpp"
#include "liestrata/strata.hpp"
#include "liestrata/subspace.hpp"

namespace liestrata {

using Json = nlohmann::ordered_json;

/// Figures carry an "exact" flag: rationals print as strings with
/// exact=true, float estimates as numbers with exact=false. Identical
/// config + seed must give byte-identical output.
Json fig_exact(const Rat& value);
Json fig_exact(long value);
Json fig_float(double value);

Json json_of_vec(const Vec& v);
Json json_of_subspace(const Subspace& s);
Json json_of_matrix(const RatMatrix& m);
Json json_of_stabilizer_report(const StabilizerReport& r);
Json json_of_inequality_report(const InequalityReport& r);
Json json_of_prop1_report(const Prop1Report& r);
Json json_of_sheet_report(const SheetReport& r);
Json json_of_jordan_type(const JordanType& t);

/// Canonical serialization used everywhere output determinism matters.
std::string dump_canonical(const Json& j);

/// Seed resolution: CLI flag beats the LIESTRATA_SEED environment
/// variable, which beats the default 0.
std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value);

}  // namespace liestrata
