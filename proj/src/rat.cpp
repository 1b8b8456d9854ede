#include "liestrata/rat.hpp"

#include <cctype>

#include "liestrata/errors.hpp"

namespace liestrata {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw input_error("bad rational '" + s + "' (expected \"p\" or \"p/q\")");
  mpz_class n(num), d(den);
  if (d == 0) throw input_error("zero denominator in '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

double rat_double(const Rat& r) { return r.get_d(); }

std::vector<Rat> rat_parse_list(const std::string& s) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(rat_parse(s.substr(start, comma - start)));
    start = comma + 1;
    if (comma == s.size()) break;
  }
  return out;
}

std::string rat_str_list(const std::vector<Rat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out;
}

}  // namespace liestrata
