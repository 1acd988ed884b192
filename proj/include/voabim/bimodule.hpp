#ifndef VOABIM_BIMODULE_HPP
#define VOABIM_BIMODULE_HPP

#include "voabim/report.hpp"
#include "voabim/span_basis.hpp"
#include "voabim/voa.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

namespace voabim {

// Products derived from the vertex operator Y(u,z) = sum_j u_j z^{-j-1}.
// All of them are bilinear; a left factor that mixes weights is handled one
// homogeneous component at a time, with the component's own weight in the
// (1+z) exponent.

// Res_z (1+z)^{wt(u)+a} z^{-b} Y(u,z) v
//   = sum_{j >= 0} C(wt(u)+a, j) u_{j-b} v.
// The sum is finite for every integer a: either the binomial column ends
// (a >= 0) or the modes annihilate v once j-b exceeds wt(u)+wt(v) levels.
GradedVector residue_product(const Voa &V, const GradedVector &u,
                             const GradedVector &v, int a, int b);

// The graded product transporting level m to level n through the auxiliary
// index p:
//   u *[m,n,p] v = sum_{i=0}^{p} (-1)^i C(m+n-p+i, i)
//                  Res_z (1+z)^{wt(u)+m} z^{-(m+n-p+i+1)} Y(u,z) v.
// Requires m, n, p >= 0. Output lives in levels up to wt(u)+wt(v)+m+n.
GradedVector star(const Voa &V, const GradedVector &u, const GradedVector &v,
                  int m, int n, int p);

// Left action variant, p = n.
GradedVector star_bar(const Voa &V, const GradedVector &u,
                      const GradedVector &v, int m, int n);

// Right action variant, p = m.
GradedVector star_right(const Voa &V, const GradedVector &u,
                        const GradedVector &v, int m, int n);

// u o[m,n] v = Res_z (1+z)^{wt(u)+m} z^{-(n+m+2)} Y(u,z) v, the first kind
// of relation the level (n,m) quotients divide out.
GradedVector circle(const Voa &V, const GradedVector &u, const GradedVector &v,
                    int m, int n);

// L(-1)u + (L(0)+m-n)u, the second kind of relation. For u the vacuum this
// is (m-n) times the vacuum.
GradedVector l_shift(const Voa &V, const GradedVector &u, int m, int n);

// Scalar c(m,n,p) with vacuum *[m,n,p] v = c(m,n,p) v:
//   c = sum_{i=0}^{p} (-1)^i C(m+n-p+i, i) C(m, m+n-p+i).
// In particular c(m,n,n) = 1.
Rational vacuum_star_scalar(int m, int n, int p);

// Echelon span of relation generators truncated at a weight cutoff.
// rank_at[t] is the rank using only generators supported in weights <= t,
// so one build answers rank questions at every smaller cutoff.
struct OSpan {
  SpanBasis basis;
  std::vector<int> rank_at;
  int cutoff = 0;

  explicit OSpan(int space_id, int cutoff_)
      : basis(space_id), rank_at(cutoff_ + 1, 0), cutoff(cutoff_) {}
};

// Cache of truncated relation spans for one algebra. "prime" spans are
// generated by the circle products, their higher-kernel relatives
//   Res_z (1+z)^{wt(u)+m+t} z^{-(n+m+2+t)} Y(u,z) v,  t >= 0,
// and the level shifts. "full" spans add two more families: products that
// push an associativity defect through a star, and images of diagonal
// relation spaces under a star on each side. The auxiliary indices of the
// extra families run over 0..aux; aux < 0 picks the default max(n,m)+2.
class OSpaces {
public:
  explicit OSpaces(std::shared_ptr<const Voa> voa);

  const Voa &voa() const { return *voa_; }
  std::shared_ptr<const Voa> voa_ptr() const { return voa_; }
  int ambient_dim(int cutoff) const;

  const OSpan &prime(int n, int m, int cutoff);
  const OSpan &full(int n, int m, int cutoff, int aux = -1);

  // Membership tests reduce against a span whose cutoff leaves two weights
  // of headroom above the vector: cutoff = max(base, top(x)+2). Throws
  // WeightRangeError when the algebra truncation cannot host that.
  GradedVector prime_residual(const GradedVector &x, int n, int m, int base);
  bool in_prime(const GradedVector &x, int n, int m, int base);
  GradedVector full_residual(const GradedVector &x, int n, int m, int base,
                             int aux = -1);
  bool in_full(const GradedVector &x, int n, int m, int base, int aux = -1);

  int membership_cutoff(const GradedVector &x, int base) const;

private:
  using Gen = std::pair<int, GradedVector>; // (top weight, generator)
  using Key = std::tuple<int, int, int, int>;

  void prime_generators(std::vector<Gen> &out, int n, int m, int cutoff) const;
  void defect_generators(std::vector<Gen> &out, int n, int m, int cutoff,
                         int aux) const;
  void diagonal_image_generators(std::vector<Gen> &out, int n, int m,
                                 int cutoff, int aux) const;
  OSpan build(std::vector<Gen> gens, int cutoff) const;

  std::shared_ptr<const Voa> voa_;
  std::map<Key, OSpan> cache_;
};

// Dimension data of one truncated quotient. dim_prev is the dimension the
// same construction gives at cutoff-1; stabilized means the two agree.
struct QuotientReport {
  int n = 0, m = 0, cutoff = 0, aux = -1;
  int ambient = 0;
  int rank_oprime = 0;
  int rank_ofull = -1; // -1 when the full span was not built
  int dim = 0, dim_prev = 0;
  bool stabilized = false;

  ordered_json to_json() const;
};

QuotientReport quotient_report(OSpaces &os, int n, int m, int cutoff,
                               bool with_full = false, int aux = -1);

// Exact identity grids: applying the level shift to the left factor
// collapses a product to a closed-form multiple of a relation generator.
// Checked for every pair of basis vectors with weights <= max_wt and all
// level indices <= max_lvl.
CheckReport lshift_star_bar_grid(const Voa &V, int max_wt, int max_lvl);
CheckReport lshift_star_grid(const Voa &V, int max_wt, int max_lvl);

// Seeded membership suites. Each trial builds a combination that must land
// in a truncated relation span and records the reduction residual.
CheckReport swap_suite(OSpaces &os, std::uint64_t seed, int trials, int max_wt,
                       int max_lvl);
CheckReport stability_suite(OSpaces &os, std::uint64_t seed, int trials,
                            int max_wt, int max_lvl);
CheckReport phi_suite(OSpaces &os, std::uint64_t seed, int trials, int max_wt,
                      int max_lvl);
CheckReport descent_suite(OSpaces &os, std::uint64_t seed, int trials,
                          int max_wt, int max_lvl);
CheckReport psi_balance_suite(OSpaces &os, std::uint64_t seed, int trials,
                              int max_wt, int max_lvl);

} // namespace voabim

#endif
