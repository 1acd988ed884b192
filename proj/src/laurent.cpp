#include "voabim/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace voabim {

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > 2)
    throw std::invalid_argument("LaurentPoly: at most two variables");
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Rational &c) {
  LaurentPoly p(std::move(vars));
  p.add_term({0, 0}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exps e,
                                  const Rational &c) {
  LaurentPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

int LaurentPoly::var_index(const std::string &var) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var)
      return (int)i;
  throw std::invalid_argument("LaurentPoly: unknown variable '" + var + "'");
}

const Rational LaurentPoly::coeff(Exps e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(Exps e, const Rational &c) {
  if (c.is_zero())
    return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

static void check_same_vars(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("LaurentPoly: variable sets differ");
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  check_same_vars(*this, o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  check_same_vars(*this, o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  check_same_vars(a, b);
  LaurentPoly out(a.vars_);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::operator*(const Rational &c) const {
  LaurentPoly out(vars_);
  if (c.is_zero())
    return out;
  for (const auto &[e, t] : terms_)
    out.terms_.emplace(e, t * c);
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly &o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::residue(const std::string &var) const {
  int i = var_index(var);
  std::vector<std::string> rest;
  for (size_t j = 0; j < vars_.size(); ++j)
    if ((int)j != i)
      rest.push_back(vars_[j]);
  LaurentPoly out(rest);
  for (const auto &[e, c] : terms_) {
    if (e[i] != -1)
      continue;
    Exps re = {0, 0};
    int slot = 0;
    for (size_t j = 0; j < vars_.size(); ++j)
      if ((int)j != i)
        re[slot++] = e[j];
    out.add_term(re, c);
  }
  return out;
}

LaurentPoly LaurentPoly::derivative(const std::string &var) const {
  int i = var_index(var);
  LaurentPoly out(vars_);
  for (const auto &[e, c] : terms_) {
    if (e[i] == 0)
      continue;
    Exps de = e;
    de[i] -= 1;
    out.add_term(de, c * Rational(e[i]));
  }
  return out;
}

Rational LaurentPoly::as_rational() const {
  if (terms_.empty())
    return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Exps{0, 0})
    return terms_.begin()->second;
  throw std::domain_error("LaurentPoly: not a constant: " + str());
}

std::string LaurentPoly::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c << ")";
    for (size_t j = 0; j < vars_.size(); ++j)
      if (e[j] != 0)
        os << "*" << vars_[j] << "^" << e[j];
  }
  return os.str();
}

LaurentPoly expand_binomial_power(const std::string &var, long alpha,
                                  long truncation_order, int base_exponent) {
  if (base_exponent == 0)
    throw std::invalid_argument("expand_binomial_power: zero base exponent");
  long kmax = alpha >= 0 ? alpha : truncation_order;
  if (kmax < 0)
    throw std::invalid_argument("expand_binomial_power: negative truncation");
  LaurentPoly p({var});
  for (long k = 0; k <= kmax; ++k)
    p.add_term({(int)(k * base_exponent), 0}, binom(alpha, k));
  return p;
}

} // namespace voabim
