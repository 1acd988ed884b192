#ifndef VOABIM_VERMA_HPP
#define VOABIM_VERMA_HPP

#include "voabim/bimodule.hpp"
#include "voabim/report.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace voabim {

// Module induced from a one-dimensional bottom space of weight h. Degree n
// is the quotient of the algebra by the (n, 0) relation span together with
// the rows that move a degree-zero factor across the tensor sign onto the
// bottom space, where it acts by the scalar chi. Built over the c = 1/2
// quotient algebra for h in {0, 1/2, 1/16}; vectors are canonical coset
// representatives inside the algebra.
class InducedModule {
public:
  InducedModule(std::shared_ptr<OSpaces> spans, const Rational &h,
                int built_levels, int cutoff);

  const Voa &algebra() const { return spans_->voa(); }
  const Rational &bottom_weight() const { return h_; }
  int built_levels() const { return built_levels_; }
  int cutoff() const { return cutoff_; }

  int dim(int n) const;
  const GradedVector &basis_rep(int n, int i) const;

  // canonical representative of the degree-n coset of x
  GradedVector reduce(int n, const GradedVector &x) const;

  // scalar by which the zero-level transport of a acts on the bottom space
  Rational chi(const GradedVector &a) const;

  // mode action u_p on the degree-n coset of x, landing at degree
  // n + wt(u) - p - 1; the zero vector when that degree is negative,
  // out of built range throws. u must be homogeneous.
  GradedVector act(const GradedVector &u, long p, int n,
                   const GradedVector &x) const;

private:
  std::shared_ptr<OSpaces> spans_;
  Rational h_;
  int built_levels_;
  int cutoff_;
  std::vector<SpanBasis> span_;
  std::vector<std::vector<GradedVector>> basis_;
  std::map<std::pair<int, int>, Rational> chi_;
};

// degree dimensions against the counting oracle for the same bottom weight
CheckReport induced_dims_report(const InducedModule &M);

// the vacuum mode p acts as the identity exactly when p = -1
CheckReport vacuum_mode_suite(const InducedModule &M, int mode_range);

// commutator of two sampled mode actions against the mode expansion of
// their products, as exact identities between canonical representatives
CheckReport commutator_suite(const InducedModule &M, std::uint64_t seed,
                             int trials, int max_wt, int mode_range);

} // namespace voabim

#endif
