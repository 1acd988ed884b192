#ifndef VOABIM_VMODULE_HPP
#define VOABIM_VMODULE_HPP

#include "voabim/report.hpp"
#include "voabim/voa.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace voabim {

// A graded module over one of the concrete algebras, truncated at a chosen
// level above its bottom vector. Modes of algebra elements act through the
// same engine as the algebra on itself.
class VModule {
public:
  // momentum eigenspace module over the rank-1 boson
  static VModule fock(std::shared_ptr<const Voa> algebra,
                      const Rational &momentum, int max_level);
  // free highest weight module over the universal Virasoro algebra
  static VModule highest_weight(std::shared_ptr<const Voa> algebra,
                                const Rational &h, int max_level);
  // irreducible quotient by the Gram radical, over the c = 1/2 algebra
  static VModule ising_irreducible(std::shared_ptr<const Voa> algebra,
                                   const Rational &h, int max_level);

  const Voa &algebra() const { return *algebra_; }
  const GradedSpace &space() const { return *space_; }
  const FreeStateSpace &cover() const { return *cover_; }
  bool is_quotient() const { return quotient_ != nullptr; }
  int max_level() const { return space_->max_level(); }

  GradedVector zero() const { return space_->zero(); }
  // the bottom vector of the module
  GradedVector bottom() const { return space_->unit(0, 0); }

  // u_k w for u in the algebra and w in the module
  GradedVector mode(const GradedVector &u, long k, const GradedVector &w) const;

  // level transport map: each homogeneous component u' of u contributes
  // u'_{wt(u')+m-n-1} w, sending module level m to level n
  GradedVector o_map(const GradedVector &u, int n, int m,
                     const GradedVector &w) const;

  std::string str(const GradedVector &w) const {
    return space_->vector_str(w);
  }

private:
  VModule(std::shared_ptr<const Voa> algebra,
          std::shared_ptr<const FreeStateSpace> cover,
          std::shared_ptr<const QuotientStateSpace> quotient,
          std::shared_ptr<const GradedSpace> space);

  std::shared_ptr<const Voa> algebra_;
  std::shared_ptr<const FreeStateSpace> cover_;
  std::shared_ptr<const QuotientStateSpace> quotient_;
  std::shared_ptr<const GradedSpace> space_;
  std::shared_ptr<ModeEngine> engine_;
};

// Independent expansion of u_k w on a free boson module, via the closed
// normal-ordered product formula for the field of a monomial state. Used to
// cross-check the engine's recursion; requires a free (non-quotient) module
// over the rank-1 boson.
GradedVector fock_mode_oracle(const VModule &M, const GradedVector &u, long k,
                              const GradedVector &w);

// Exact grid: the level transport of a graded product factors through the
// auxiliary level, o[n<-m](a *[m,n,p] b) w = o[n<-p](a) o[p<-m](b) w, for
// all basis pairs with weights <= max_wt, all levels and p <= max_lvl, and
// every basis vector w of the starting level.
CheckReport compose_grid(const VModule &M, int max_wt, int max_lvl);

// Sampled relation generators act as zero on every basis vector of the
// starting level.
CheckReport annihilation_suite(const VModule &M, std::uint64_t seed,
                               int trials, int max_wt, int max_lvl);

// Vectors at level <= m are killed by every mode that lowers by more than
// m levels; for each sampled level above m some mode acts nonzero.
CheckReport omega_suite(const VModule &M, std::uint64_t seed, int trials,
                        int max_wt, int max_lvl);

} // namespace voabim

#endif
