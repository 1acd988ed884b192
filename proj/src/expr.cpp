#include "voabim/expr.hpp"

#include "voabim/errors.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace voabim {

namespace {

class Cursor {
public:
  explicit Cursor(const std::string &text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
      ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  bool eat_word(const std::string &w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) != 0)
      return false;
    pos_ += w.size();
    return true;
  }

  [[noreturn]] void fail(const std::string &expected) const {
    std::ostringstream os;
    os << "parse error at position " << pos_ << ": expected " << expected;
    throw UsageError(os.str());
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("an integer");
    }
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range &) {
      pos_ = start;
      fail("a smaller integer");
    }
  }

  // digits, optionally followed by '/' and more digits; no leading sign
  Rational unsigned_rational() {
    long num = integer();
    if (!eat('/'))
      return Rational(num);
    long den = integer();
    if (den == 0)
      fail("a nonzero denominator");
    return Rational(num, den);
  }

  std::size_t pos() const { return pos_; }

private:
  const std::string &text_;
  std::size_t pos_ = 0;
};

} // namespace

Rational parse_rational(const std::string &text) {
  Cursor cur(text);
  bool neg = cur.eat('-');
  if (!neg)
    cur.eat('+');
  Rational r = cur.unsigned_rational();
  if (!cur.done())
    cur.fail("end of input");
  return neg ? -r : r;
}

GradedVector parse_element(const Voa &voa, const std::string &text) {
  const GradedSpace &S = voa.space();
  std::string gen_name = voa.kind() == AlgebraKind::boson ? "a" : "L";
  int min_part = voa.cover().min_part();
  Cursor cur(text);
  GradedVector out = S.zero();
  bool first = true;
  while (true) {
    Rational sign(1);
    if (cur.eat('-'))
      sign = Rational(-1);
    else if (cur.eat('+'))
      ;
    else if (!first)
      break;
    first = false;

    Rational coeff(1);
    if (std::isdigit((unsigned char)cur.peek()))
      coeff = cur.unsigned_rational();

    // generator string applied right to left to the vacuum
    std::vector<long> modes;
    long level = 0;
    while (!cur.eat_word("vac")) {
      if (!cur.eat_word(gen_name))
        cur.fail("'" + gen_name + "(' or 'vac'");
      if (!cur.eat('('))
        cur.fail("'('");
      long m = cur.integer();
      if (!cur.eat(')'))
        cur.fail("')'");
      if (m > -min_part) {
        std::ostringstream os;
        os << "creation mode " << gen_name << "(" << m
           << ") out of range; this algebra needs arguments <= " << -min_part;
        throw UsageError(os.str());
      }
      modes.push_back(m);
      level += -m;
    }
    if (level > voa.max_weight())
      throw WeightRangeError((int)level, voa.max_weight());

    GradedVector term = S.unit(0, 0);
    for (auto it = modes.rbegin(); it != modes.rend(); ++it)
      term = S.apply_generator((int)*it, term);
    out.add_scaled(term, sign * coeff);
  }
  if (!cur.done())
    cur.fail("'+', '-' or end of input");
  return out;
}

} // namespace voabim
