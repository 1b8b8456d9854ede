#pragma once

#include <map>
#include <string>
#include <vector>

#include "liestrata/rat.hpp"

namespace liestrata {

/// Sparse multivariate polynomial over exact rationals. Used only for
/// the symbolic Poisson tensor: minors, their gcd, and squarefree parts.
/// Degrees and variable counts stay at desk scale (dim <= 8), so the
/// classical primitive-PRS gcd is plenty.
class Poly {
 public:
  using Monomial = std::vector<int>;  // exponent per variable

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly var(std::size_t nvars, std::size_t i, int exp = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // valid when is_constant()
  int degree(std::size_t v) const;
  std::size_t term_count() const { return terms_.size(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly negated() const;
  Poly scaled(const Rat& s) const;
  bool operator==(const Poly& o) const = default;

  Poly derivative(std::size_t v) const;
  Rat eval(const std::vector<Rat>& point) const;

  /// Exact division; throws invariant_error if d does not divide this.
  Poly divexact(const Poly& d) const;

  /// Coefficients of this viewed as univariate in v (exponent -> Poly
  /// without v).
  std::map<int, Poly> coeffs_in(std::size_t v) const;
  Poly shifted_by_var(std::size_t v, int exp) const;  // * v^exp

  /// Canonical scalar normalization: integer coefficients with content
  /// 1 and positive leading (lex) coefficient. "Up to scalar" outputs
  /// are reported in this form.
  Poly primitive_normalized() const;

  Poly squarefree_part() const;

  std::string str(const std::vector<std::string>& names) const;

  friend Poly poly_gcd(Poly a, Poly b);

  /// Fraction-free Bareiss determinant.
  static Poly det(std::vector<std::vector<Poly>> m);

 private:
  void add_term(const Monomial& mono, const Rat& c);
  std::size_t nvars_ = 0;
  std::map<Monomial, Rat> terms_;  // lex-ordered by exponent vector
};

Poly poly_gcd(Poly a, Poly b);

}  // namespace liestrata
