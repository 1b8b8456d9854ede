#include "liestrata/poly.hpp"

#include <algorithm>

#include "liestrata/errors.hpp"

namespace liestrata {

namespace {

mpz_class rat_num(const Rat& r) { return r.get_num(); }
mpz_class rat_den(const Rat& r) { return r.get_den(); }

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

Poly Poly::var(std::size_t nvars, std::size_t i, int exp) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[i] = exp;
  p.terms_[m] = 1;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  return terms_.begin()->second;
}

int Poly::degree(std::size_t v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

void Poly::add_term(const Monomial& mono, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_[mono] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::negated() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::scaled(const Rat& s) const {
  if (s == 0) return Poly(nvars_);
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c *= s;
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(nvars_);
  Monomial sum(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t v = 0; v < nvars_; ++v) sum[v] = ma[v] + mb[v];
      out.add_term(sum, ca * cb);
    }
  return out;
}

Poly Poly::derivative(std::size_t v) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial d = m;
    d[v] -= 1;
    out.add_term(d, c * m[v]);
  }
  return out;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  Rat out(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      for (int e = 0; e < m[v]; ++e) term *= point[v];
    out += term;
  }
  return out;
}

std::map<int, Poly> Poly::coeffs_in(std::size_t v) const {
  std::map<int, Poly> out;
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    const int e = reduced[v];
    reduced[v] = 0;
    auto it = out.find(e);
    if (it == out.end()) {
      Poly p(nvars_);
      p.terms_[reduced] = c;
      out.emplace(e, std::move(p));
    } else {
      it->second.add_term(reduced, c);
    }
  }
  return out;
}

Poly Poly::shifted_by_var(std::size_t v, int exp) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    s[v] += exp;
    out.terms_[s] = c;
  }
  return out;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw invariant_error("polynomial division by zero");
  Poly rem = *this;
  Poly quot(nvars_);
  const auto& dlead = *d.terms_.rbegin();  // lex-largest term of divisor
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Monomial q(nvars_);
    bool divides = true;
    for (std::size_t v = 0; v < nvars_; ++v) {
      q[v] = rlead.first[v] - dlead.first[v];
      if (q[v] < 0) {
        divides = false;
        break;
      }
    }
    if (!divides) throw invariant_error("inexact polynomial division");
    const Rat coeff = rlead.second / dlead.second;
    Poly qterm(nvars_);
    qterm.terms_[q] = coeff;
    quot = quot + qterm;
    rem = rem - qterm * d;
  }
  return quot;
}

namespace {

/// gcd of two integers as a positive mpz.
mpz_class z_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

Poly Poly::primitive_normalized() const {
  if (is_zero()) return *this;
  // Clear denominators, divide by integer content, make the lex-leading
  // coefficient positive.
  mpz_class den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_class g = z_gcd(den_lcm, rat_den(c));
    den_lcm = den_lcm / g * rat_den(c);
  }
  mpz_class content(0);
  for (const auto& [m, c] : terms_) {
    mpz_class scaled_num = rat_num(c) * (den_lcm / rat_den(c));
    content = z_gcd(content, scaled_num);
  }
  Rat factor(den_lcm, content);
  factor.canonicalize();
  Poly out = scaled(factor);
  if (out.terms_.rbegin()->second < 0) out = out.negated();
  return out;
}

namespace {

/// Pseudo-remainder of a by b in the variable v (both nonzero, viewed
/// as univariate in v with polynomial coefficients).
Poly pseudo_rem(const Poly& a, const Poly& b, std::size_t v) {
  Poly r = a;
  const int db = b.degree(v);
  auto bc = b.coeffs_in(v);
  const Poly blead = bc.rbegin()->second;
  int dr = r.degree(v);
  while (!r.is_zero() && dr >= db) {
    auto rc = r.coeffs_in(v);
    auto it = rc.find(dr);
    if (it == rc.end() || it->second.is_zero()) {
      dr -= 1;
      continue;
    }
    const Poly rlead = it->second;
    // r <- blead * r - rlead * v^{dr-db} * b
    r = blead * r - rlead.shifted_by_var(v, dr - db) * b;
    dr = r.degree(v);
    if (r.is_zero()) break;
    if (r.degree(v) >= a.degree(v) + b.degree(v) + 4)
      throw invariant_error("pseudo-remainder diverged");
  }
  return r;
}

Poly content_in(const Poly& p, std::size_t v) {
  Poly g(p.nvars());
  for (const auto& [e, coeff] : p.coeffs_in(v)) g = poly_gcd(g, coeff);
  return g;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.primitive_normalized();
  if (b.is_zero()) return a.primitive_normalized();
  if (a.is_constant() || b.is_constant())
    return Poly::constant(a.nvars(), Rat(1));

  // Main variable: the highest index positive-degree in both; if they
  // share none, only constants divide both.
  std::size_t v = 0;
  bool found = false;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.degree(i) > 0 && b.degree(i) > 0) {
      v = i;
      found = true;
      break;
    }
  }
  if (!found) return Poly::constant(a.nvars(), Rat(1));

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  Poly pa = a.divexact(ca).primitive_normalized();
  Poly pb = b.divexact(cb).primitive_normalized();
  const Poly cg = poly_gcd(ca, cb);

  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_rem(pa, pb, v);
    pa = pb;
    if (r.is_zero()) {
      pb = Poly(a.nvars());
    } else if (r.degree(v) == 0) {
      // Nonzero remainder of degree 0 in v: the univariate gcd is 1.
      return cg.primitive_normalized();
    } else {
      pb = r.divexact(content_in(r, v)).primitive_normalized();
    }
  }
  return (cg * pa).primitive_normalized();
}

Poly Poly::squarefree_part() const {
  if (is_zero()) return *this;
  if (is_constant()) return Poly::constant(nvars_, Rat(1));
  Poly g(nvars_);
  bool any = false;
  for (std::size_t v = 0; v < nvars_; ++v) {
    Poly d = derivative(v);
    if (d.is_zero()) continue;
    any = true;
    g = g.is_zero() ? poly_gcd(*this, d) : poly_gcd(g, d);
    if (g.is_constant()) break;
  }
  if (!any) return Poly::constant(nvars_, Rat(1));
  if (g.is_constant()) return primitive_normalized();
  return divexact(g).primitive_normalized();
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Print lex-largest first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string term;
    bool has_var = false;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      if (has_var) term += "*";
      term += names[v];
      if (m[v] > 1) term += "^" + std::to_string(m[v]);
      has_var = true;
    }
    Rat coeff = c;
    std::string sign = (coeff < 0) ? "-" : "+";
    if (coeff < 0) coeff = -coeff;
    std::string cs = rat_str(coeff);
    std::string piece;
    if (!has_var)
      piece = cs;
    else if (cs == "1")
      piece = term;
    else
      piece = cs + "*" + term;
    if (first) {
      out = (sign == "-") ? "-" + piece : piece;
      first = false;
    } else {
      out += " " + sign + " " + piece;
    }
  }
  return out;
}

Poly Poly::det(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(0, Rat(1));
  const std::size_t nvars = m[0][0].nvars();
  if (n == 1) return m[0][0];
  // Fraction-free Bareiss: exact divisions by the previous pivot.
  Poly prev = Poly::constant(nvars, Rat(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Poly(nvars);  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev);
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return sign < 0 ? d.negated() : d;
}

}  // namespace liestrata
