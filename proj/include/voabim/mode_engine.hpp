#ifndef VOABIM_MODE_ENGINE_HPP
#define VOABIM_MODE_ENGINE_HPP

#include "voabim/state_space.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>

namespace voabim {

// Action u_k v of vertex-operator modes of algebra states on a module.
//
// A state u = g(-p) b is peeled one generator at a time with the iterate
// recursion
//   (a_m b)_k = sum_i (-1)^i C(m,i) (a_{m-i} b_{k+i} - (-1)^m b_{m+k-i} a_i)
// where a is the generating field (weight 1 boson, weight 2 virasoro), so
// a_j acts as alpha_j resp. L_{j-1}, and m = wt(a) - 1 - p. The base case
// is the vacuum state, whose only nonzero mode is the identity at k = -1.
// Everything lands at level lvl(v) + wt(u) - k - 1; modes aiming below
// level 0 vanish and modes aiming above the module's max level throw.
class ModeEngine {
public:
  ModeEngine(std::shared_ptr<const FreeStateSpace> alg,
             std::shared_ptr<const GradedSpace> mod);

  const FreeStateSpace &algebra() const { return *alg_; }
  const GradedSpace &module_space() const { return *mod_; }

  // u_k v, bilinear in u and v
  GradedVector mode(const GradedVector &u, long k, const GradedVector &v) const;

private:
  GradedVector mode_vec(int ul, int ui, long k, const GradedVector &v) const;
  GradedVector mode_basis(int ul, int ui, long k, int vl, int vi) const;
  // a_j as an operator on the module
  GradedVector field_mode(long j, const GradedVector &v) const;

  std::shared_ptr<const FreeStateSpace> alg_;
  std::shared_ptr<const GradedSpace> mod_;
  int gh_;
  // bounded so that huge verification grids cannot exhaust memory
  static constexpr std::size_t kMemoCap = 1u << 19;
  mutable std::unordered_map<std::uint64_t, GradedVector> memo_;
};

} // namespace voabim

#endif
