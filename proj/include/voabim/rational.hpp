#ifndef VOABIM_RATIONAL_HPP
#define VOABIM_RATIONAL_HPP

#include <gmpxx.h>

#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_map>

namespace voabim {

// Exact rational scalar backed by GMP. Invariant: lowest terms, positive
// denominator (GMP keeps arithmetic results canonical; construction from a
// num/den pair canonicalizes explicitly).
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_((signed long)n) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class &v) : v_(v) {}

  // accepts "p", "-p", "p/q"
  static Rational from_string(const std::string &s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool fits_long() const;
  long to_long() const; // throws std::domain_error unless integer in range
  int sign() const { return sgn(v_); }

  const mpq_class &raw() const { return v_; }
  std::string str() const;

  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
  mpq_class v_;
};

// Generalized binomial coefficient over the integers:
//   binom(a, k) = a(a-1)...(a-k+1)/k!  for k >= 0,  0 for k < 0.
// Defined for any integer a (negative upper index included). Memoized.
Rational binom(long a, long k);

// Explicit memo table, for callers that want their own lifetime control.
class BinomialTable {
public:
  const Rational &get(long a, long k);

private:
  struct Key {
    long a, k;
    bool operator==(const Key &o) const { return a == o.a && k == o.k; }
  };
  struct KeyHash {
    size_t operator()(const Key &key) const {
      return std::hash<long>()(key.a * 1000003L + key.k);
    }
  };
  std::unordered_map<Key, Rational, KeyHash> memo_;
};

} // namespace voabim

#endif
