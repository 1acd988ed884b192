#include "voabim/mode_engine.hpp"

#include "voabim/errors.hpp"

namespace voabim {

ModeEngine::ModeEngine(std::shared_ptr<const FreeStateSpace> alg,
                       std::shared_ptr<const GradedSpace> mod)
    : alg_(std::move(alg)), mod_(std::move(mod)),
      gh_(alg_->kind() == AlgebraKind::boson ? 1 : 2) {
  if (alg_->kind() != mod_->kind())
    throw std::invalid_argument("ModeEngine: algebra and module kinds differ");
  if (alg_->lowest_weight().kind != LowestWeight::vacuum)
    throw std::invalid_argument("ModeEngine: algebra side must be a vacuum space");
}

GradedVector ModeEngine::field_mode(long j, const GradedVector &v) const {
  int p = (int)(gh_ == 1 ? j : j - 1);
  return mod_->apply_generator(p, v);
}

GradedVector ModeEngine::mode(const GradedVector &u, long k,
                              const GradedVector &v) const {
  alg_->check_vector(u);
  mod_->check_vector(v);
  GradedVector out = mod_->zero();
  if (v.is_zero() || u.is_zero())
    return out;
  int vtop = v.max_level();
  for (const auto &[uk, uc] : u.terms()) {
    long target = (long)vtop + uk.first - k - 1;
    if (target > mod_->max_level())
      throw WeightRangeError((int)target, mod_->max_level());
    out.add_scaled(mode_vec(uk.first, uk.second, k, v), uc);
  }
  return out;
}

GradedVector ModeEngine::mode_vec(int ul, int ui, long k,
                                  const GradedVector &v) const {
  GradedVector out = mod_->zero();
  for (const auto &[vk, vc] : v.terms())
    out.add_scaled(mode_basis(ul, ui, k, vk.first, vk.second), vc);
  return out;
}

static std::uint64_t pack_key(int ul, int ui, long k, int vl, int vi) {
  if (k < -2047 || k > 2047 || ul > 63 || vl > 63 || ui > 16383 || vi > 16383)
    throw InvariantError("ModeEngine: memo key out of packed range");
  std::uint64_t key = (std::uint64_t)(k + 2048);
  key = (key << 6) | (std::uint64_t)ul;
  key = (key << 14) | (std::uint64_t)ui;
  key = (key << 6) | (std::uint64_t)vl;
  key = (key << 14) | (std::uint64_t)vi;
  return key;
}

GradedVector ModeEngine::mode_basis(int ul, int ui, long k, int vl, int vi) const {
  long target = (long)vl + ul - k - 1;
  if (target < 0)
    return mod_->zero();
  if (ul == 0)
    return k == -1 ? mod_->unit(vl, vi) : mod_->zero();

  std::uint64_t key = pack_key(ul, ui, k, vl, vi);
  auto hit = memo_.find(key);
  if (hit != memo_.end())
    return hit->second;

  const Partition &parts = alg_->partition(ul, ui);
  int p1 = parts[0];
  Partition rest(parts.begin() + 1, parts.end());
  int rl = ul - p1;
  int ri = alg_->index_of(rest);
  long m0 = gh_ - 1 - p1;
  bool m0_odd = ((m0 % 2) + 2) % 2 == 1;

  GradedVector out = mod_->zero();
  for (long i = 0;; ++i) {
    if (m0 >= 0 && i > m0)
      break;
    if ((long)vl + rl - (k + i) - 1 < 0)
      break;
    GradedVector b = mode_basis(rl, ri, k + i, vl, vi);
    if (b.is_zero())
      continue;
    Rational c = binom(m0, i);
    if (i % 2 != 0)
      c = -c;
    out.add_scaled(field_mode(m0 - i, b), c);
  }
  for (long i = 0; i <= (long)vl + gh_ - 1; ++i) {
    if (m0 >= 0 && i > m0)
      break;
    GradedVector av = field_mode(i, mod_->unit(vl, vi));
    if (av.is_zero())
      continue;
    GradedVector b = mode_vec(rl, ri, m0 + k - i, av);
    if (b.is_zero())
      continue;
    Rational c = binom(m0, i);
    if ((i % 2 != 0) != m0_odd)
      c = -c;
    out.add_scaled(b, -c);
  }

  if (memo_.size() < kMemoCap)
    memo_.emplace(key, out);
  return out;
}

} // namespace voabim
