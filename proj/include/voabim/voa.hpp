#ifndef VOABIM_VOA_HPP
#define VOABIM_VOA_HPP

#include "voabim/mode_engine.hpp"
#include "voabim/state_space.hpp"

#include <memory>
#include <string>

namespace voabim {

// A vertex operator algebra with an exact mode action on itself, truncated
// at a chosen maximum weight. Three concrete algebras are provided:
//   heisenberg(W)            rank-1 free boson, c = 1
//   virasoro_universal(c, W) vacuum Verma quotient by L(-1)|0> only
//   ising(W)                 simple c = 1/2 algebra, cut out as the Gram
//                            radical quotient of the universal one
class Voa {
public:
  static Voa heisenberg(int max_weight);
  static Voa virasoro_universal(const Rational &c, int max_weight);
  static Voa ising(int max_weight);

  const std::string &name() const { return name_; }
  int max_weight() const { return space_->max_level(); }
  const Rational &central_charge() const { return space_->central_charge(); }
  AlgebraKind kind() const { return space_->kind(); }

  const GradedSpace &space() const { return *space_; }
  const FreeStateSpace &cover() const { return *cover_; }
  std::shared_ptr<const FreeStateSpace> cover_ptr() const { return cover_; }
  bool is_quotient() const { return quotient_ != nullptr; }
  const ModeEngine &engine() const { return *engine_; }

  // coordinates of u in the free cover; identity for non-quotient algebras
  GradedVector lift_to_cover(const GradedVector &u) const;

  GradedVector vacuum() const { return space_->unit(0, 0); }
  const GradedVector &omega() const { return omega_; }

  // u_k v for states of this algebra
  GradedVector mode(const GradedVector &u, long k, const GradedVector &v) const;
  // L(n) v, i.e. omega_{n+1} v
  GradedVector virasoro(int n, const GradedVector &v) const;
  // weight of a homogeneous state
  int weight_of(const GradedVector &v) const;
  // e^{L(1)} (-1)^{L(0)} v
  GradedVector phi(const GradedVector &v) const;

  std::string str(const GradedVector &v) const { return space_->vector_str(v); }

private:
  Voa(std::string name, std::shared_ptr<const FreeStateSpace> cover,
      std::shared_ptr<const QuotientStateSpace> quotient,
      std::shared_ptr<const GradedSpace> space);

  std::string name_;
  std::shared_ptr<const FreeStateSpace> cover_;
  std::shared_ptr<const QuotientStateSpace> quotient_;
  std::shared_ptr<const GradedSpace> space_;
  std::shared_ptr<ModeEngine> engine_;
  GradedVector omega_;
};

} // namespace voabim

#endif
