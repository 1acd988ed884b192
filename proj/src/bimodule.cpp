#include "voabim/bimodule.hpp"

#include "voabim/errors.hpp"

#include <algorithm>
#include <utility>

namespace voabim {

GradedVector residue_product(const Voa &V, const GradedVector &u,
                             const GradedVector &v, int a, int b) {
  GradedVector out = V.space().zero();
  if (u.is_zero() || v.is_zero())
    return out;
  for (int w = u.min_level(); w <= u.max_level(); ++w) {
    GradedVector uw = u.slice(w);
    if (uw.is_zero())
      continue;
    long alpha = w + a;
    // modes u_{j-b} with j-b >= w + top(v) annihilate v
    long jcut = (long)w + v.max_level() + b - 1;
    long jmax = alpha >= 0 ? std::min(alpha, jcut) : jcut;
    for (long j = 0; j <= jmax; ++j) {
      Rational c = binom(alpha, j);
      if (c.is_zero())
        continue;
      out.add_scaled(V.mode(uw, j - b, v), c);
    }
  }
  return out;
}

GradedVector star(const Voa &V, const GradedVector &u, const GradedVector &v,
                  int m, int n, int p) {
  if (m < 0 || n < 0 || p < 0)
    throw UsageError("star: level indices must be nonnegative");
  GradedVector out = V.space().zero();
  for (int i = 0; i <= p; ++i) {
    Rational c = binom((long)m + n - p + i, i);
    if (c.is_zero())
      continue;
    if (i % 2 != 0)
      c = -c;
    out.add_scaled(residue_product(V, u, v, m, m + n - p + i + 1), c);
  }
  return out;
}

GradedVector star_bar(const Voa &V, const GradedVector &u,
                      const GradedVector &v, int m, int n) {
  return star(V, u, v, m, n, n);
}

GradedVector star_right(const Voa &V, const GradedVector &u,
                        const GradedVector &v, int m, int n) {
  return star(V, u, v, m, n, m);
}

GradedVector circle(const Voa &V, const GradedVector &u, const GradedVector &v,
                    int m, int n) {
  if (m < 0 || n < 0)
    throw UsageError("circle: level indices must be nonnegative");
  return residue_product(V, u, v, m, n + m + 2);
}

GradedVector l_shift(const Voa &V, const GradedVector &u, int m, int n) {
  if (u.is_zero())
    return V.space().zero();
  GradedVector out = V.virasoro(-1, u);
  for (int w = u.min_level(); w <= u.max_level(); ++w) {
    GradedVector s = u.slice(w);
    if (!s.is_zero())
      out.add_scaled(s, Rational(w + m - n));
  }
  return out;
}

Rational vacuum_star_scalar(int m, int n, int p) {
  Rational c(0);
  for (int i = 0; i <= p; ++i) {
    Rational t = binom((long)m + n - p + i, i) * binom(m, (long)m + n - p + i);
    if (i % 2 != 0)
      t = -t;
    c += t;
  }
  return c;
}

OSpaces::OSpaces(std::shared_ptr<const Voa> voa) : voa_(std::move(voa)) {
  if (!voa_)
    throw UsageError("OSpaces: null algebra");
}

int OSpaces::ambient_dim(int cutoff) const {
  if (cutoff < 0 || cutoff > voa_->max_weight())
    throw WeightRangeError(cutoff, voa_->max_weight());
  int d = 0;
  for (int l = 0; l <= cutoff; ++l)
    d += voa_->space().dim(l);
  return d;
}

void OSpaces::prime_generators(std::vector<Gen> &out, int n, int m,
                               int cutoff) const {
  const Voa &V = *voa_;
  const GradedSpace &S = V.space();
  // level shifts of every state whose shifted image stays under the cutoff
  for (int w = 0; w + 1 <= cutoff; ++w)
    for (int i = 0; i < S.dim(w); ++i) {
      GradedVector g = l_shift(V, S.unit(w, i), m, n);
      if (!g.is_zero())
        out.emplace_back(g.max_level(), std::move(g));
    }
  // kernel family: Res_z (1+z)^{wt(u)+m+t} z^{-(n+m+2+t)} Y(u,z) v, t >= 0.
  // The vacuum contributes nothing here, so the left weight starts at 1.
  for (int wu = 1; wu + n + m + 1 <= cutoff; ++wu) {
    if (S.dim(wu) == 0)
      continue;
    for (int wv = 0; wu + wv + n + m + 1 <= cutoff; ++wv) {
      if (S.dim(wv) == 0)
        continue;
      int top0 = wu + wv + n + m + 1;
      for (int t = 0; top0 + t <= cutoff; ++t)
        for (int ui = 0; ui < S.dim(wu); ++ui)
          for (int vi = 0; vi < S.dim(wv); ++vi) {
            GradedVector g = residue_product(V, S.unit(wu, ui), S.unit(wv, vi),
                                             m + t, n + m + 2 + t);
            if (!g.is_zero())
              out.emplace_back(g.max_level(), std::move(g));
          }
    }
  }
}

void OSpaces::defect_generators(std::vector<Gen> &out, int n, int m, int cutoff,
                                int aux) const {
  const Voa &V = *voa_;
  const GradedSpace &S = V.space();
  for (int p3 = 0; p3 <= aux; ++p3)
    for (int p2 = 0; p2 <= aux; ++p2)
      for (int p1 = 0; p1 <= aux; ++p1) {
        int extra =
            m + n + std::max(p1 + 2 * p3 + m, 2 * m + p2 + p3);
        if (extra > cutoff)
          continue;
        int budget = cutoff - extra;
        for (int wa = 0; wa <= budget; ++wa) {
          if (S.dim(wa) == 0)
            continue;
          for (int wb = 0; wa + wb <= budget; ++wb) {
            if (S.dim(wb) == 0)
              continue;
            for (int wc = 0; wa + wb + wc <= budget; ++wc) {
              if (S.dim(wc) == 0)
                continue;
              for (int ia = 0; ia < S.dim(wa); ++ia)
                for (int ib = 0; ib < S.dim(wb); ++ib)
                  for (int ic = 0; ic < S.dim(wc); ++ic) {
                    GradedVector a = S.unit(wa, ia);
                    GradedVector b = S.unit(wb, ib);
                    GradedVector c = S.unit(wc, ic);
                    // associativity defect of two bracketings
                    GradedVector d =
                        star(V, star(V, a, b, p1, p3, p2), c, m, p3, p1);
                    d.add_scaled(
                        star(V, a, star(V, b, c, m, p2, p1), m, p3, p2),
                        Rational(-1));
                    if (d.is_zero())
                      continue;
                    for (int wu = 0; wa + wb + wc + wu <= budget; ++wu)
                      for (int iu = 0; iu < S.dim(wu); ++iu) {
                        GradedVector g =
                            star(V, S.unit(wu, iu), d, m, n, p3);
                        if (!g.is_zero())
                          out.emplace_back(g.max_level(), std::move(g));
                      }
                  }
            }
          }
        }
      }
}

void OSpaces::diagonal_image_generators(std::vector<Gen> &out, int n, int m,
                                        int cutoff, int aux) const {
  const Voa &V = *voa_;
  const GradedSpace &S = V.space();
  for (int p = 0; p <= aux; ++p) {
    int extra = p + m + 2 * n;
    if (extra >= cutoff)
      continue;
    std::vector<Gen> middle;
    prime_generators(middle, p, p, cutoff - extra);
    for (const Gen &gm : middle) {
      for (int wx = 0; wx + gm.first + extra <= cutoff; ++wx) {
        if (S.dim(wx) == 0)
          continue;
        for (int ix = 0; ix < S.dim(wx); ++ix) {
          GradedVector inner = star(V, S.unit(wx, ix), gm.second, p, n, p);
          if (inner.is_zero())
            continue;
          int itop = inner.max_level();
          for (int wy = 0; itop + wy + m + n <= cutoff; ++wy) {
            if (S.dim(wy) == 0)
              continue;
            for (int iy = 0; iy < S.dim(wy); ++iy) {
              GradedVector g = star(V, inner, S.unit(wy, iy), m, n, p);
              if (!g.is_zero())
                out.emplace_back(g.max_level(), std::move(g));
            }
          }
        }
      }
    }
  }
}

OSpan OSpaces::build(std::vector<Gen> gens, int cutoff) const {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Gen &a, const Gen &b) { return a.first < b.first; });
  OSpan span(voa_->space().id(), cutoff);
  std::size_t next = 0;
  for (int t = 0; t <= cutoff; ++t) {
    while (next < gens.size() && gens[next].first <= t) {
      span.basis.insert(gens[next].second);
      ++next;
    }
    span.rank_at[t] = span.basis.rank();
  }
  return span;
}

const OSpan &OSpaces::prime(int n, int m, int cutoff) {
  if (n < 0 || m < 0)
    throw UsageError("relation span: negative level index");
  if (cutoff < 0 || cutoff > voa_->max_weight())
    throw WeightRangeError(cutoff, voa_->max_weight());
  Key key{n, m, cutoff, -1};
  auto it = cache_.find(key);
  if (it != cache_.end())
    return it->second;
  std::vector<Gen> gens;
  prime_generators(gens, n, m, cutoff);
  return cache_.emplace(key, build(std::move(gens), cutoff)).first->second;
}

const OSpan &OSpaces::full(int n, int m, int cutoff, int aux) {
  if (n < 0 || m < 0)
    throw UsageError("relation span: negative level index");
  if (cutoff < 0 || cutoff > voa_->max_weight())
    throw WeightRangeError(cutoff, voa_->max_weight());
  if (aux < 0)
    aux = std::max(n, m) + 2;
  Key key{n, m, cutoff, aux};
  auto it = cache_.find(key);
  if (it != cache_.end())
    return it->second;
  std::vector<Gen> gens;
  prime_generators(gens, n, m, cutoff);
  defect_generators(gens, n, m, cutoff, aux);
  diagonal_image_generators(gens, n, m, cutoff, aux);
  return cache_.emplace(key, build(std::move(gens), cutoff)).first->second;
}

int OSpaces::membership_cutoff(const GradedVector &x, int base) const {
  int c = base;
  if (!x.is_zero())
    c = std::max(c, x.max_level() + 2);
  if (c > voa_->max_weight())
    throw WeightRangeError(c, voa_->max_weight());
  return c;
}

GradedVector OSpaces::prime_residual(const GradedVector &x, int n, int m,
                                     int base) {
  return prime(n, m, membership_cutoff(x, base)).basis.reduce(x);
}

bool OSpaces::in_prime(const GradedVector &x, int n, int m, int base) {
  return prime_residual(x, n, m, base).is_zero();
}

GradedVector OSpaces::full_residual(const GradedVector &x, int n, int m,
                                    int base, int aux) {
  return full(n, m, membership_cutoff(x, base), aux).basis.reduce(x);
}

bool OSpaces::in_full(const GradedVector &x, int n, int m, int base, int aux) {
  return full_residual(x, n, m, base, aux).is_zero();
}

ordered_json QuotientReport::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["cutoff"] = cutoff;
  if (aux >= 0)
    j["aux"] = aux;
  j["ambient"] = ambient;
  j["rank_oprime"] = rank_oprime;
  if (rank_ofull >= 0)
    j["rank_ofull"] = rank_ofull;
  j["dim"] = dim;
  j["dim_prev"] = dim_prev;
  j["stabilized"] = stabilized;
  return j;
}

QuotientReport quotient_report(OSpaces &os, int n, int m, int cutoff,
                               bool with_full, int aux) {
  QuotientReport r;
  r.n = n;
  r.m = m;
  r.cutoff = cutoff;
  r.ambient = os.ambient_dim(cutoff);
  const OSpan &pr = os.prime(n, m, cutoff);
  r.rank_oprime = pr.basis.rank();
  int rank_used = r.rank_oprime;
  int rank_prev = pr.rank_at[cutoff > 0 ? cutoff - 1 : 0];
  if (with_full) {
    const OSpan &fl = os.full(n, m, cutoff, aux);
    r.aux = aux < 0 ? std::max(n, m) + 2 : aux;
    r.rank_ofull = fl.basis.rank();
    rank_used = r.rank_ofull;
    rank_prev = fl.rank_at[cutoff > 0 ? cutoff - 1 : 0];
  }
  r.dim = r.ambient - rank_used;
  int ambient_prev = cutoff > 0 ? os.ambient_dim(cutoff - 1) : r.ambient;
  r.dim_prev = ambient_prev - rank_prev;
  r.stabilized = cutoff > 0 && r.dim == r.dim_prev;
  return r;
}

CheckReport lshift_star_bar_grid(const Voa &V, int max_wt, int max_lvl) {
  const GradedSpace &S = V.space();
  CheckReport rep;
  rep.suite = "lshift_star_bar";
  rep.params = {
      {"voa", V.name()}, {"max_weight", max_wt}, {"max_level", max_lvl}};
  for (int wu = 0; wu <= max_wt; ++wu)
    for (int ui = 0; ui < S.dim(wu); ++ui) {
      GradedVector u = S.unit(wu, ui);
      GradedVector su = l_shift(V, u, 0, 0);
      for (int wv = 0; wv <= max_wt; ++wv)
        for (int vi = 0; vi < S.dim(wv); ++vi) {
          GradedVector v = S.unit(wv, vi);
          for (int m = 0; m <= max_lvl; ++m)
            for (int n = 0; n <= max_lvl; ++n) {
              Rational c = binom((long)n + m, m) * Rational(n + m + 1);
              if (n % 2 != 0)
                c = -c;
              GradedVector diff = star_bar(V, su, v, m, n);
              diff.add_scaled(circle(V, u, v, m, n), -c);
              rep.record(diff.is_zero(),
                         {{"u", V.str(u)},
                          {"v", V.str(v)},
                          {"m", m},
                          {"n", n}},
                         V.str(diff));
            }
        }
    }
  return rep;
}

CheckReport lshift_star_grid(const Voa &V, int max_wt, int max_lvl) {
  const GradedSpace &S = V.space();
  CheckReport rep;
  rep.suite = "lshift_star";
  rep.params = {
      {"voa", V.name()}, {"max_weight", max_wt}, {"max_level", max_lvl}};
  for (int wu = 0; wu <= max_wt; ++wu)
    for (int ui = 0; ui < S.dim(wu); ++ui) {
      GradedVector u = S.unit(wu, ui);
      for (int wv = 0; wv <= max_wt; ++wv)
        for (int vi = 0; vi < S.dim(wv); ++vi) {
          GradedVector v = S.unit(wv, vi);
          for (int m = 0; m <= max_lvl; ++m)
            for (int p2 = 0; p2 <= max_lvl; ++p2) {
              GradedVector base = residue_product(V, u, v, m, m + p2 + 2);
              for (int p1 = 0; p1 <= max_lvl; ++p1) {
                GradedVector su = l_shift(V, u, p1, p2);
                Rational c = binom((long)m + p2, p1) * Rational(m + p2 + 1);
                if (p1 % 2 != 0)
                  c = -c;
                GradedVector diff = star(V, su, v, m, p2, p1);
                diff.add_scaled(base, -c);
                rep.record(diff.is_zero(),
                           {{"u", V.str(u)},
                            {"v", V.str(v)},
                            {"m", m},
                            {"p1", p1},
                            {"p2", p2}},
                           V.str(diff));
              }
            }
        }
    }
  return rep;
}

CheckReport swap_suite(OSpaces &os, std::uint64_t seed, int trials, int max_wt,
                       int max_lvl) {
  const Voa &V = os.voa();
  const GradedSpace &S = V.space();
  Sampler smp(seed);
  CheckReport rep;
  rep.suite = "swap";
  rep.params = {{"voa", V.name()},
                {"seed", seed},
                {"trials", trials},
                {"max_weight", max_wt},
                {"max_level", max_lvl}};
  for (int t = 0; t < trials; ++t) {
    int branch = t % 3;
    int m = (int)smp.next_int(0, max_lvl);
    int wu = sample_level(smp, S, 0, max_wt);
    GradedVector u = sample_nonzero_homogeneous(smp, S, wu, 2);
    GradedVector v = sample_nonzero_vector(smp, S, max_wt, 3);
    int p1 = 0, p2 = 0, n = 0;
    GradedVector x;
    if (branch == 0) {
      p1 = (int)smp.next_int(0, max_lvl);
      p2 = (int)smp.next_int(std::max(0, m - p1), max_lvl);
      n = p1 + p2 - m;
      x = star(V, u, v, m, n, p1);
      x.add_scaled(star(V, v, u, m, n, p2), Rational(-1));
    } else if (branch == 1) {
      p2 = -(int)smp.next_int(1, std::max(1, max_lvl));
      n = (int)smp.next_int(0, max_lvl);
      p1 = n + m - p2;
      x = star(V, u, v, m, n, p1);
    } else {
      p1 = -(int)smp.next_int(1, std::max(1, max_lvl));
      n = (int)smp.next_int(0, max_lvl);
      p2 = n + m - p1;
      x = star(V, v, u, m, n, p2).scaled(Rational(-1));
    }
    x.add_scaled(residue_product(V, u, v, m - p2 - 1, 0), Rational(-1));
    GradedVector res = os.prime_residual(x, n, m, 8);
    rep.record(res.is_zero(),
               {{"branch", branch},
                {"u", V.str(u)},
                {"v", V.str(v)},
                {"m", m},
                {"n", n},
                {"p1", p1},
                {"p2", p2}},
               V.str(res));
  }
  return rep;
}

CheckReport stability_suite(OSpaces &os, std::uint64_t seed, int trials,
                            int max_wt, int max_lvl) {
  const Voa &V = os.voa();
  const GradedSpace &S = V.space();
  Sampler smp(seed);
  CheckReport rep;
  rep.suite = "stability";
  rep.params = {{"voa", V.name()},
                {"seed", seed},
                {"trials", trials},
                {"max_weight", max_wt},
                {"max_level", max_lvl}};
  for (int t = 0; t < trials; ++t) {
    int m = (int)smp.next_int(0, max_lvl);
    int n = (int)smp.next_int(0, max_lvl);
    if (t % 2 == 0) {
      // products with a relation generator on one side stay relations
      int kind = (int)smp.next_int(0, 1);
      GradedVector g;
      ordered_json inputs;
      int wc;
      if (kind == 0) {
        int wa = sample_level(smp, S, 0, std::min(max_wt, 8 - m - n));
        GradedVector a = sample_nonzero_homogeneous(smp, S, wa, 2);
        g = l_shift(V, a, m, n);
        wc = sample_level(smp, S, 0,
                         std::max(0, std::min(max_wt, 9 - m - n - wa)));
        inputs = {{"family", "action"}, {"kind", "shift"}, {"a", V.str(a)}};
      } else {
        long tcap = std::max(0L, std::min(2L, 8L - 2 * (m + n)));
        int tt = (int)smp.next_int(0, tcap);
        int budget = std::max(1, 9 - 2 * (m + n) - tt);
        int wa = sample_level(smp, S, 1, std::max(1, std::min(max_wt, budget)));
        int wb =
            sample_level(smp, S, 0, std::max(0, std::min(max_wt, budget - wa)));
        GradedVector a = sample_nonzero_homogeneous(smp, S, wa, 2);
        GradedVector b = sample_nonzero_homogeneous(smp, S, wb, 2);
        g = residue_product(V, a, b, m + tt, n + m + 2 + tt);
        wc = sample_level(smp, S, 0,
                         std::max(0, std::min(max_wt, budget - wa - wb)));
        inputs = {{"family", "action"},
                  {"kind", "kernel"},
                  {"a", V.str(a)},
                  {"b", V.str(b)},
                  {"t", tt}};
      }
      GradedVector c = sample_nonzero_homogeneous(smp, S, wc, 2);
      bool left = smp.next_int(0, 1) == 0;
      GradedVector x =
          left ? star_bar(V, c, g, m, n) : star_right(V, g, c, m, n);
      GradedVector res = os.prime_residual(x, n, m, 8);
      inputs["side"] = left ? "left" : "right";
      inputs["c"] = V.str(c);
      inputs["m"] = m;
      inputs["n"] = n;
      rep.record(res.is_zero(), inputs, V.str(res));
    } else {
      // associator of the two one-sided products is a relation
      int budget = std::max(0, 10 - 2 * (m + n));
      int wa = sample_level(smp, S, 0, std::min(max_wt, budget));
      int wb = sample_level(smp, S, 0, std::min(max_wt, budget - wa));
      int wc = sample_level(smp, S, 0, std::min(max_wt, budget - wa - wb));
      GradedVector a = sample_nonzero_homogeneous(smp, S, wa, 2);
      GradedVector b = sample_nonzero_homogeneous(smp, S, wb, 2);
      GradedVector c = sample_nonzero_homogeneous(smp, S, wc, 2);
      GradedVector x = star_right(V, star_bar(V, a, b, m, n), c, m, n);
      x.add_scaled(star_bar(V, a, star_right(V, b, c, m, n), m, n),
                   Rational(-1));
      GradedVector res = os.prime_residual(x, n, m, 8);
      rep.record(res.is_zero(),
                 {{"family", "associator"},
                  {"a", V.str(a)},
                  {"b", V.str(b)},
                  {"c", V.str(c)},
                  {"m", m},
                  {"n", n}},
                 V.str(res));
    }
  }
  return rep;
}

CheckReport phi_suite(OSpaces &os, std::uint64_t seed, int trials, int max_wt,
                      int max_lvl) {
  const Voa &V = os.voa();
  const GradedSpace &S = V.space();
  Sampler smp(seed);
  CheckReport rep;
  rep.suite = "phi";
  rep.params = {{"voa", V.name()},
                {"seed", seed},
                {"trials", trials},
                {"max_weight", max_wt},
                {"max_level", max_lvl}};
  for (int t = 0; t < trials; ++t) {
    int m = (int)smp.next_int(0, max_lvl);
    int n = (int)smp.next_int(0, max_lvl);
    int p = (int)smp.next_int(0, max_lvl);
    int wu = sample_level(smp, S, 0, max_wt);
    GradedVector u = sample_nonzero_homogeneous(smp, S, wu, 2);
    GradedVector v = sample_nonzero_vector(smp, S, max_wt, 3);
    GradedVector x = V.phi(star(V, u, v, m, n, p));
    x.add_scaled(star(V, V.phi(v), V.phi(u), n, m, p), Rational(-1));
    GradedVector res = os.prime_residual(x, m, n, 8);
    rep.record(res.is_zero(),
               {{"u", V.str(u)},
                {"v", V.str(v)},
                {"m", m},
                {"n", n},
                {"p", p}},
               V.str(res));
  }
  return rep;
}

CheckReport descent_suite(OSpaces &os, std::uint64_t seed, int trials,
                          int max_wt, int max_lvl) {
  const Voa &V = os.voa();
  const GradedSpace &S = V.space();
  Sampler smp(seed);
  CheckReport rep;
  rep.suite = "descent";
  rep.params = {{"voa", V.name()},
                {"seed", seed},
                {"trials", trials},
                {"max_weight", max_wt},
                {"max_level", max_lvl}};
  int hi = std::max(1, max_lvl);
  for (int t = 0; t < trials; ++t) {
    int m = (int)smp.next_int(1, hi);
    int n = (int)smp.next_int(1, hi);
    int p = (int)smp.next_int(1, hi);
    int wu = sample_level(smp, S, 0, max_wt);
    GradedVector u = sample_nonzero_homogeneous(smp, S, wu, 2);
    GradedVector v = sample_nonzero_vector(smp, S, max_wt, 3);
    GradedVector x = star(V, u, v, m, n, p);
    x.add_scaled(star(V, u, v, m - 1, n - 1, p - 1), Rational(-1));
    GradedVector res = os.prime_residual(x, n - 1, m - 1, 8);
    rep.record(res.is_zero(),
               {{"u", V.str(u)},
                {"v", V.str(v)},
                {"m", m},
                {"n", n},
                {"p", p}},
               V.str(res));
  }
  return rep;
}

CheckReport psi_balance_suite(OSpaces &os, std::uint64_t seed, int trials,
                              int max_wt, int max_lvl) {
  const Voa &V = os.voa();
  const GradedSpace &S = V.space();
  Sampler smp(seed);
  CheckReport rep;
  rep.suite = "psi_balance";
  rep.params = {{"voa", V.name()},
                {"seed", seed},
                {"trials", trials},
                {"max_weight", max_wt},
                {"max_level", max_lvl}};
  for (int t = 0; t < trials; ++t) {
    int m, n, p, wu, ww, wv;
    // keep the combination inside the base membership cutoff
    do {
      m = (int)smp.next_int(0, max_lvl);
      n = (int)smp.next_int(0, max_lvl);
      p = (int)smp.next_int(0, max_lvl);
      wu = sample_level(smp, S, 0, max_wt);
      ww = sample_level(smp, S, 0, max_wt);
      wv = sample_level(smp, S, 0, max_wt);
    } while (wu + ww + wv + p + m + 2 * n > 6);
    GradedVector u = sample_nonzero_homogeneous(smp, S, wu, 2);
    GradedVector w = sample_nonzero_homogeneous(smp, S, ww, 2);
    GradedVector v = sample_nonzero_homogeneous(smp, S, wv, 2);
    GradedVector x = star(V, star(V, u, w, p, n, p), v, m, n, p);
    x.add_scaled(star(V, u, star(V, w, v, m, p, p), m, n, p), Rational(-1));
    GradedVector res = os.full_residual(x, n, m, 8);
    rep.record(res.is_zero(),
               {{"u", V.str(u)},
                {"w", V.str(w)},
                {"v", V.str(v)},
                {"m", m},
                {"n", n},
                {"p", p}},
               V.str(res));
  }
  return rep;
}

} // namespace voabim
