#include "voabim/vmodule.hpp"

#include "voabim/bimodule.hpp"
#include "voabim/errors.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace voabim {

namespace {

std::string bottom_label(const Rational &value) {
  std::ostringstream os;
  os << "|" << value << ">";
  return os.str();
}

} // namespace

VModule::VModule(std::shared_ptr<const Voa> algebra,
                 std::shared_ptr<const FreeStateSpace> cover,
                 std::shared_ptr<const QuotientStateSpace> quotient,
                 std::shared_ptr<const GradedSpace> space)
    : algebra_(std::move(algebra)), cover_(std::move(cover)),
      quotient_(std::move(quotient)), space_(std::move(space)) {
  engine_ = std::make_shared<ModeEngine>(algebra_->cover_ptr(), space_);
}

VModule VModule::fock(std::shared_ptr<const Voa> algebra,
                      const Rational &momentum, int max_level) {
  if (!algebra || algebra->kind() != AlgebraKind::boson ||
      algebra->is_quotient())
    throw UsageError("fock module: algebra must be the rank-1 boson");
  auto cover = std::make_shared<FreeStateSpace>(
      AlgebraKind::boson, algebra->central_charge(),
      LowestWeight::make_fock(momentum), 1, max_level, bottom_label(momentum));
  return VModule(std::move(algebra), cover, nullptr, cover);
}

VModule VModule::highest_weight(std::shared_ptr<const Voa> algebra,
                                const Rational &h, int max_level) {
  if (!algebra || algebra->kind() != AlgebraKind::virasoro ||
      algebra->is_quotient())
    throw UsageError(
        "highest weight module: algebra must be the universal Virasoro");
  auto cover = std::make_shared<FreeStateSpace>(
      AlgebraKind::virasoro, algebra->central_charge(), LowestWeight::make_hw(h),
      1, max_level, bottom_label(h));
  return VModule(std::move(algebra), cover, nullptr, cover);
}

VModule VModule::ising_irreducible(std::shared_ptr<const Voa> algebra,
                                   const Rational &h, int max_level) {
  if (!algebra || algebra->kind() != AlgebraKind::virasoro ||
      !algebra->is_quotient())
    throw UsageError(
        "irreducible module: algebra must be the c = 1/2 quotient");
  if (!(h == Rational(0) || h == Rational(1, 2) || h == Rational(1, 16)))
    throw UsageError(
        "irreducible module: bottom weight must be 0, 1/2, or 1/16");
  int need = graded_capacity(AlgebraKind::virasoro, max_level);
  auto cover = std::make_shared<FreeStateSpace>(
      AlgebraKind::virasoro, algebra->central_charge(), LowestWeight::make_hw(h),
      1, need, bottom_label(h));
  auto rows = gram_radical_rows(*cover, need);
  auto quotient =
      std::make_shared<QuotientStateSpace>(cover, rows, max_level);
  return VModule(std::move(algebra), cover, quotient, quotient);
}

GradedVector VModule::mode(const GradedVector &u, long k,
                           const GradedVector &w) const {
  return engine_->mode(algebra_->lift_to_cover(u), k, w);
}

GradedVector VModule::o_map(const GradedVector &u, int n, int m,
                            const GradedVector &w) const {
  if (n < 0 || m < 0)
    throw UsageError("o_map: level indices must be nonnegative");
  GradedVector out = space_->zero();
  if (u.is_zero() || w.is_zero())
    return out;
  for (int l = u.min_level(); l <= u.max_level(); ++l) {
    GradedVector s = u.slice(l);
    if (!s.is_zero())
      out += mode(s, (long)l + m - n - 1, w);
  }
  return out;
}

namespace {

// one summand of the normal-ordered expansion: fix a mode index for every
// field factor, then act annihilators first, momentum factors, creators last
void expand_tuples(const FreeStateSpace &mod, const Partition &parts,
                   std::size_t i, long remaining, long f, int wl,
                   std::vector<long> &ms, const Rational &coeff,
                   const GradedVector &w0, GradedVector &out) {
  long r = (long)parts.size() - (long)i;
  if (r == 0) {
    if (remaining != 0)
      return;
    GradedVector v = w0;
    for (long m : ms)
      if (m > 0 && !v.is_zero())
        v = mod.apply_generator((int)m, v);
    for (long m : ms)
      if (m == 0 && !v.is_zero())
        v = mod.apply_generator(0, v);
    for (long m : ms)
      if (m < 0 && !v.is_zero())
        v = mod.apply_generator((int)m, v);
    out.add_scaled(v, coeff);
    return;
  }
  if (remaining < -f * r || remaining > (long)wl * r)
    return;
  long n = parts[i];
  for (long m = -f; m <= wl; ++m) {
    Rational c = binom(-m - 1, n - 1);
    if (c.is_zero())
      continue;
    ms[i] = m;
    expand_tuples(mod, parts, i + 1, remaining - m, f, wl, ms, coeff * c, w0,
                  out);
  }
}

} // namespace

GradedVector fock_mode_oracle(const VModule &M, const GradedVector &u, long k,
                              const GradedVector &w) {
  const Voa &V = M.algebra();
  if (V.kind() != AlgebraKind::boson || V.is_quotient())
    throw UsageError("fock_mode_oracle: algebra must be the rank-1 boson");
  if (M.is_quotient())
    throw UsageError("fock_mode_oracle: module must be free");
  const FreeStateSpace &alg = V.cover();
  const FreeStateSpace &mod = M.cover();
  GradedVector out = mod.zero();
  if (u.is_zero() || w.is_zero())
    return out;
  for (const auto &[ukey, cu] : u.terms()) {
    int ul = ukey.first, ui = ukey.second;
    const Partition &parts = alg.partition(ul, ui);
    for (const auto &[wkey, cw] : w.terms()) {
      int wl = wkey.first, wi = wkey.second;
      long f = (long)wl + ul - k - 1;
      if (f < 0)
        continue;
      if (f > mod.max_level())
        throw WeightRangeError((int)f, mod.max_level());
      if (parts.empty()) {
        // the field of the vacuum is the identity
        if (k == -1)
          out.add(wl, wi, cu * cw);
        continue;
      }
      std::vector<long> ms(parts.size(), 0);
      expand_tuples(mod, parts, 0, k + 1 - ul, f, wl, ms, cu * cw,
                    mod.unit(wl, wi), out);
    }
  }
  return out;
}

CheckReport compose_grid(const VModule &M, int max_wt, int max_lvl) {
  const Voa &V = M.algebra();
  const GradedSpace &S = V.space();
  const GradedSpace &W = M.space();
  CheckReport rep;
  rep.suite = "compose";
  rep.params = {{"voa", V.name()},
                {"module", W.label(0, 0)},
                {"max_weight", max_wt},
                {"max_level", max_lvl}};
  for (int wa = 0; wa <= max_wt; ++wa)
    for (int ia = 0; ia < S.dim(wa); ++ia) {
      GradedVector a = S.unit(wa, ia);
      for (int wb = 0; wb <= max_wt; ++wb)
        for (int ib = 0; ib < S.dim(wb); ++ib) {
          GradedVector b = S.unit(wb, ib);
          for (int m = 0; m <= max_lvl; ++m) {
            if (W.dim(m) == 0)
              continue;
            for (int n = 0; n <= max_lvl; ++n)
              for (int p = 0; p <= max_lvl; ++p) {
                GradedVector sab = star(V, a, b, m, n, p);
                for (int wi = 0; wi < W.dim(m); ++wi) {
                  GradedVector w = W.unit(m, wi);
                  GradedVector diff = M.o_map(sab, n, m, w);
                  diff.add_scaled(M.o_map(a, n, p, M.o_map(b, p, m, w)),
                                  Rational(-1));
                  rep.record(diff.is_zero(),
                             {{"a", V.str(a)},
                              {"b", V.str(b)},
                              {"m", m},
                              {"n", n},
                              {"p", p},
                              {"w", M.str(w)}},
                             M.str(diff));
                }
              }
          }
        }
    }
  return rep;
}

CheckReport annihilation_suite(const VModule &M, std::uint64_t seed,
                               int trials, int max_wt, int max_lvl) {
  const Voa &V = M.algebra();
  const GradedSpace &S = V.space();
  const GradedSpace &W = M.space();
  Sampler smp(seed);
  CheckReport rep;
  rep.suite = "annihilation";
  rep.params = {{"voa", V.name()},
                {"module", W.label(0, 0)},
                {"seed", seed},
                {"trials", trials},
                {"max_weight", max_wt},
                {"max_level", max_lvl}};
  for (int t = 0; t < trials; ++t) {
    int kind = t % 3;
    int n, m;
    GradedVector g;
    ordered_json inputs;
    if (kind == 0) {
      n = (int)smp.next_int(0, max_lvl);
      m = (int)smp.next_int(0, max_lvl);
      int wa = sample_level(smp, S, 0, std::min(max_wt, V.max_weight() - 1));
      GradedVector a = sample_nonzero_homogeneous(smp, S, wa, 2);
      g = l_shift(V, a, m, n);
      inputs = {{"kind", "shift"}, {"a", V.str(a)}};
    } else if (kind == 1) {
      n = (int)smp.next_int(0, max_lvl);
      m = (int)smp.next_int(0, max_lvl);
      // the product tops out at wa + wb + n + m + 1 + t
      int budget = V.max_weight() - n - m - 1;
      int wa = sample_level(smp, S, 1, std::min(max_wt, budget));
      int wb =
          sample_level(smp, S, 0, std::max(0, std::min(max_wt, budget - wa)));
      int tt = (int)smp.next_int(0, std::max(0, std::min(2, budget - wa - wb)));
      GradedVector a = sample_nonzero_homogeneous(smp, S, wa, 2);
      GradedVector b = sample_nonzero_homogeneous(smp, S, wb, 2);
      g = residue_product(V, a, b, m + tt, n + m + 2 + tt);
      inputs = {{"kind", "kernel"},
                {"a", V.str(a)},
                {"b", V.str(b)},
                {"t", tt}};
    } else {
      // an associativity defect pushed through a product
      int lcap = std::min(1, max_lvl);
      n = (int)smp.next_int(0, lcap);
      m = (int)smp.next_int(0, lcap);
      int p1 = (int)smp.next_int(0, 1);
      int p2 = (int)smp.next_int(0, 1);
      int p3 = (int)smp.next_int(0, 1);
      // weights share what is left of the top bound of the nested products
      int budget = V.max_weight() - n - m -
                   std::max(p1 + 2 * p3 + m, 2 * m + p2 + p3);
      int wcap = std::min(2, max_wt);
      auto draw = [&] {
        int w = sample_level(smp, S, 0, std::max(0, std::min(wcap, budget)));
        budget -= w;
        return sample_nonzero_homogeneous(smp, S, w, 2);
      };
      GradedVector a = draw();
      GradedVector b = draw();
      GradedVector c = draw();
      GradedVector u = draw();
      GradedVector d = star(V, star(V, a, b, p1, p3, p2), c, m, p3, p1);
      d.add_scaled(star(V, a, star(V, b, c, m, p2, p1), m, p3, p2),
                   Rational(-1));
      g = star(V, u, d, m, n, p3);
      inputs = {{"kind", "defect"},
                {"u", V.str(u)},
                {"a", V.str(a)},
                {"b", V.str(b)},
                {"c", V.str(c)},
                {"p1", p1},
                {"p2", p2},
                {"p3", p3}};
    }
    inputs["n"] = n;
    inputs["m"] = m;
    bool all_zero = true;
    std::string residual = "0";
    for (int wi = 0; wi < W.dim(m) && all_zero; ++wi) {
      GradedVector x = M.o_map(g, n, m, W.unit(m, wi));
      if (!x.is_zero()) {
        all_zero = false;
        inputs["w"] = M.str(W.unit(m, wi));
        residual = M.str(x);
      }
    }
    rep.record(all_zero, inputs, residual);
  }
  return rep;
}

CheckReport omega_suite(const VModule &M, std::uint64_t seed, int trials,
                        int max_wt, int max_lvl) {
  const Voa &V = M.algebra();
  const GradedSpace &S = V.space();
  const GradedSpace &W = M.space();
  Sampler smp(seed);
  CheckReport rep;
  rep.suite = "omega";
  rep.params = {{"voa", V.name()},
                {"module", W.label(0, 0)},
                {"seed", seed},
                {"trials", trials},
                {"max_weight", max_wt},
                {"max_level", max_lvl}};
  for (int t = 0; t < trials; ++t) {
    int mm = (int)smp.next_int(0, max_lvl);
    // below the threshold every sufficiently lowering mode kills the vector
    GradedVector w = sample_nonzero_vector(smp, W, mm, 2);
    int wu = sample_level(smp, S, 1, max_wt);
    GradedVector u = sample_nonzero_homogeneous(smp, S, wu, 2);
    int kk = (int)smp.next_int(mm + 1, mm + 3);
    GradedVector x = M.mode(u, (long)wu - 1 + kk, w);
    rep.record(x.is_zero(),
               {{"part", "inside"},
                {"w", M.str(w)},
                {"u", V.str(u)},
                {"k", kk},
                {"m", mm}},
               M.str(x));
    // above it some mode still lowering by more than mm levels acts nonzero
    int hi = std::min(mm + 3, W.max_level());
    if (mm + 1 > hi)
      continue;
    int l = sample_level(smp, W, mm + 1, hi);
    int li = (int)smp.next_int(0, W.dim(l) - 1);
    GradedVector wv = W.unit(l, li);
    // the escaping element can need weight up to the state's level: lowering
    // a level-l state straight to the bottom takes a full dual partner
    bool found = false;
    for (int uw = 1; uw <= std::max(max_wt, l) && !found; ++uw)
      for (int ui = 0; ui < S.dim(uw) && !found; ++ui)
        for (int k2 = mm + 1; k2 <= l && !found; ++k2)
          found = !M.mode(S.unit(uw, ui), (long)uw - 1 + k2, wv).is_zero();
    rep.record(found,
               {{"part", "beyond"}, {"w", M.str(wv)}, {"m", mm}, {"level", l}},
               found ? "0" : "no escaping mode found");
  }
  return rep;
}

} // namespace voabim
