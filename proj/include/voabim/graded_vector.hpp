#ifndef VOABIM_GRADED_VECTOR_HPP
#define VOABIM_GRADED_VECTOR_HPP

#include "voabim/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace voabim {

// Sparse exact vector over a graded basis, keyed by (level, basis index).
// space_id ties a vector to the space it lives in; -1 marks the zero vector,
// which is valid in any space. Zero coefficients are never stored, so equal
// vectors are structurally equal.
class GradedVector {
public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  GradedVector() = default;
  explicit GradedVector(int space_id) : space_id_(space_id) {}

  int space_id() const { return space_id_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Terms &terms() const { return terms_; }

  void add(int level, int idx, const Rational &c) {
    if (c.is_zero())
      return;
    auto [it, fresh] = terms_.try_emplace({level, idx}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  void add_scaled(const GradedVector &o, const Rational &c) {
    if (c.is_zero())
      return;
    adopt_space(o);
    for (const auto &[k, v] : o.terms_)
      add(k.first, k.second, v * c);
  }

  GradedVector &operator+=(const GradedVector &o) { add_scaled(o, Rational(1)); return *this; }
  GradedVector &operator-=(const GradedVector &o) { add_scaled(o, Rational(-1)); return *this; }
  friend GradedVector operator+(GradedVector a, const GradedVector &b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector &b) { return a -= b; }

  GradedVector scaled(const Rational &c) const {
    GradedVector out(space_id_);
    out.add_scaled(*this, c);
    return out;
  }
  void scale(const Rational &c) {
    if (c.is_zero()) {
      terms_.clear();
      return;
    }
    for (auto &[k, v] : terms_)
      v *= c;
  }

  Rational coeff(int level, int idx) const {
    auto it = terms_.find({level, idx});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const GradedVector &o) const { return terms_ == o.terms_; }
  bool operator!=(const GradedVector &o) const { return !(*this == o); }

  // -1 on the zero vector
  int min_level() const { return terms_.empty() ? -1 : terms_.begin()->first.first; }
  int max_level() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }
  bool is_homogeneous() const { return terms_.empty() || min_level() == max_level(); }

  GradedVector slice(int level) const {
    GradedVector out(space_id_);
    for (auto it = terms_.lower_bound({level, 0});
         it != terms_.end() && it->first.first == level; ++it)
      out.add(it->first.first, it->first.second, it->second);
    return out;
  }

private:
  void adopt_space(const GradedVector &o);

  int space_id_ = -1;
  Terms terms_;
};

inline void GradedVector::adopt_space(const GradedVector &o) {
  if (o.space_id_ == -1)
    return;
  if (space_id_ == -1)
    space_id_ = o.space_id_;
  else if (space_id_ != o.space_id_)
    throw std::logic_error("GradedVector: mixing vectors from different spaces");
}

} // namespace voabim

#endif
