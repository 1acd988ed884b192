#ifndef VOABIM_LAURENT_HPP
#define VOABIM_LAURENT_HPP

#include "voabim/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace voabim {

// Laurent polynomial with exact rational coefficients in one or two named
// variables. Terms with negative exponents are first-class; storage is a
// sorted sparse map of exponent tuples, so equality is structural.
class LaurentPoly {
public:
  using Exps = std::array<int, 2>; // unused slots are 0

  explicit LaurentPoly(std::vector<std::string> vars);
  static LaurentPoly constant(std::vector<std::string> vars, const Rational &c);
  static LaurentPoly monomial(std::vector<std::string> vars, Exps e,
                              const Rational &c);

  const std::vector<std::string> &vars() const { return vars_; }
  int arity() const { return (int)vars_.size(); }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  const Rational coeff(Exps e) const;
  void add_term(Exps e, const Rational &c);

  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  LaurentPoly operator*(const Rational &c) const;

  bool operator==(const LaurentPoly &o) const;
  bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

  // coefficient of var^{-1}, as a Laurent polynomial in the remaining
  // variables (a constant when univariate)
  LaurentPoly residue(const std::string &var) const;
  LaurentPoly derivative(const std::string &var) const;

  // a constant polynomial's value; throws if any variable still occurs
  Rational as_rational() const;

  std::string str() const;

  const std::map<Exps, Rational> &terms() const { return terms_; }

private:
  int var_index(const std::string &var) const; // throws on unknown variable
  std::vector<std::string> vars_;
  std::map<Exps, Rational> terms_;
};

// (1 + z^base_exponent)^alpha in the single variable `var`, expanded in
// nonnegative powers of z^base_exponent: sum_k binom(alpha,k) z^{bk}. Exact
// (k runs to alpha) when alpha >= 0; otherwise the series is truncated after
// k = truncation_order.
LaurentPoly expand_binomial_power(const std::string &var, long alpha,
                                  long truncation_order, int base_exponent = 1);

} // namespace voabim

#endif
