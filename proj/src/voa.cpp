#include "voabim/voa.hpp"

#include "voabim/errors.hpp"

namespace voabim {

Voa::Voa(std::string name, std::shared_ptr<const FreeStateSpace> cover,
         std::shared_ptr<const QuotientStateSpace> quotient,
         std::shared_ptr<const GradedSpace> space)
    : name_(std::move(name)), cover_(std::move(cover)), quotient_(std::move(quotient)),
      space_(std::move(space)),
      engine_(std::make_shared<ModeEngine>(cover_, space_)) {
  GradedVector w(cover_->id());
  if (cover_->kind() == AlgebraKind::boson) {
    w.add(2, cover_->index_of({1, 1}), Rational(1, 2));
  } else {
    w.add(2, cover_->index_of({2}), Rational(1));
  }
  omega_ = quotient_ ? quotient_->project(w) : w;
}

Voa Voa::heisenberg(int max_weight) {
  auto cover = std::make_shared<FreeStateSpace>(
      AlgebraKind::boson, Rational(1), LowestWeight::make_vacuum(), 1, max_weight,
      "vac");
  return Voa("heisenberg", cover, nullptr, cover);
}

Voa Voa::virasoro_universal(const Rational &c, int max_weight) {
  auto cover = std::make_shared<FreeStateSpace>(
      AlgebraKind::virasoro, c, LowestWeight::make_vacuum(), 2, max_weight, "vac");
  return Voa("virasoro", cover, nullptr, cover);
}

Voa Voa::ising(int max_weight) {
  int need = graded_capacity(AlgebraKind::virasoro, max_weight);
  auto cover = std::make_shared<FreeStateSpace>(
      AlgebraKind::virasoro, Rational(1, 2), LowestWeight::make_vacuum(), 2, need,
      "vac");
  auto quotient = std::make_shared<QuotientStateSpace>(
      cover, gram_radical_rows(*cover, need), max_weight);
  return Voa("ising", cover, quotient, quotient);
}

GradedVector Voa::lift_to_cover(const GradedVector &u) const {
  space_->check_vector(u);
  return quotient_ ? quotient_->lift(u) : u;
}

GradedVector Voa::mode(const GradedVector &u, long k, const GradedVector &v) const {
  return engine_->mode(lift_to_cover(u), k, v);
}

GradedVector Voa::virasoro(int n, const GradedVector &v) const {
  return mode(omega_, n + 1, v);
}

int Voa::weight_of(const GradedVector &v) const {
  space_->check_vector(v);
  if (v.is_zero() || !v.is_homogeneous())
    throw std::invalid_argument("weight_of: state is not homogeneous");
  return v.min_level();
}

GradedVector Voa::phi(const GradedVector &v) const {
  space_->check_vector(v);
  GradedVector w = space_->zero();
  for (const auto &[k, c] : v.terms())
    w.add(k.first, k.second, k.first % 2 == 0 ? c : -c);
  GradedVector acc = w;
  GradedVector cur = w;
  long j = 1;
  while (!cur.is_zero()) {
    cur = virasoro(1, cur);
    cur.scale(Rational(1, j));
    acc += cur;
    ++j;
  }
  return acc;
}

} // namespace voabim
