#include "voabim/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace voabim {

Rational::Rational(long num, long den) : v_((signed long)num, (signed long)den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string &s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

bool Rational::fits_long() const {
  return is_integer() && v_.get_num().fits_slong_p();
}

long Rational::to_long() const {
  if (!fits_long())
    throw std::domain_error("Rational: " + str() + " is not a small integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.v_;
}

const Rational &BinomialTable::get(long a, long k) {
  auto it = memo_.find(Key{a, k});
  if (it != memo_.end())
    return it->second;
  Rational r;
  if (k < 0) {
    r = Rational(0);
  } else if (k == 0) {
    r = Rational(1);
  } else {
    mpz_class num(1);
    for (long i = 0; i < k; ++i)
      num *= mpz_class((signed long)(a - i));
    mpz_class den(1);
    for (long i = 2; i <= k; ++i)
      den *= i;
    mpq_class q(num, den);
    q.canonicalize();
    r = Rational(q);
  }
  return memo_.emplace(Key{a, k}, r).first->second;
}

Rational binom(long a, long k) {
  static BinomialTable table;
  return table.get(a, k);
}

} // namespace voabim
