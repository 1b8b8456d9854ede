#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace liestrata {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator), which the subspace code relies on for
/// bit-exact basis comparison.
using Rat = mpq_class;

/// Parses "p" or "p/q" with optional leading minus. Decimal points,
/// exponents and whitespace are rejected: exactness is a contract,
/// so "0.5" is an error rather than a silent float.
Rat rat_parse(const std::string& s);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

std::vector<Rat> rat_parse_list(const std::string& comma_separated);
std::string rat_str_list(const std::vector<Rat>& v);

}  // namespace liestrata
