#include "voabim/verma.hpp"

#include "voabim/characters.hpp"
#include "voabim/errors.hpp"
#include "voabim/vmodule.hpp"

#include <sstream>
#include <utility>

namespace voabim {

namespace {

std::string rational_str(const Rational &r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

} // namespace

InducedModule::InducedModule(std::shared_ptr<OSpaces> spans, const Rational &h,
                             int built_levels, int cutoff)
    : spans_(std::move(spans)), h_(h), built_levels_(built_levels),
      cutoff_(cutoff) {
  if (!spans_)
    throw UsageError("induced module: missing relation span cache");
  const Voa &V = algebra();
  if (V.kind() != AlgebraKind::virasoro || !V.is_quotient())
    throw UsageError("induced module: algebra must be the c = 1/2 quotient");
  ising_graded_dims(h_, 0);
  if (built_levels_ < 0 || cutoff_ < built_levels_ ||
      cutoff_ > V.max_weight())
    throw UsageError("induced module: degree range out of bounds");

  const GradedSpace &S = V.space();
  auto L = VModule::ising_irreducible(spans_->voa_ptr(), h_, 4);
  for (int w = 0; w <= cutoff_; ++w)
    for (int i = 0; i < S.dim(w); ++i) {
      GradedVector v = L.o_map(S.unit(w, i), 0, 0, L.bottom());
      chi_[{w, i}] = v.coeff(0, 0);
    }

  for (int n = 0; n <= built_levels_; ++n) {
    SpanBasis sp = spans_->prime(n, 0, cutoff_).basis;
    // rows moving a degree-zero right factor onto the bottom space
    for (int wv = 0; wv + n <= cutoff_; ++wv)
      for (int iv = 0; iv < S.dim(wv); ++iv) {
        GradedVector v = S.unit(wv, iv);
        for (int wa = 0; wv + wa + n <= cutoff_; ++wa)
          for (int ia = 0; ia < S.dim(wa); ++ia) {
            GradedVector row = star(V, v, S.unit(wa, ia), 0, n, 0);
            row.add_scaled(v, -chi_.at({wa, ia}));
            sp.insert(row);
          }
      }
    span_.push_back(std::move(sp));

    // canonical representatives, scanned upward so they sit at low weight
    std::vector<GradedVector> reps;
    SpanBasis seen(S.id());
    for (int l = 0; l <= cutoff_; ++l)
      for (int i = 0; i < S.dim(l); ++i) {
        GradedVector r = span_.back().reduce(S.unit(l, i));
        if (seen.insert(r))
          reps.push_back(std::move(r));
      }
    basis_.push_back(std::move(reps));
  }
}

int InducedModule::dim(int n) const {
  if (n < 0 || n > built_levels_)
    throw UsageError("induced module: degree out of built range");
  return (int)basis_[n].size();
}

const GradedVector &InducedModule::basis_rep(int n, int i) const {
  if (i < 0 || i >= dim(n))
    throw UsageError("induced module: basis index out of range");
  return basis_[n][i];
}

GradedVector InducedModule::reduce(int n, const GradedVector &x) const {
  if (n < 0 || n > built_levels_)
    throw UsageError("induced module: degree out of built range");
  return span_[n].reduce(x);
}

Rational InducedModule::chi(const GradedVector &a) const {
  Rational out(0);
  for (const auto &[k, c] : a.terms()) {
    auto it = chi_.find(k);
    if (it == chi_.end())
      throw UsageError("chi: element reaches past the built cutoff");
    out += c * it->second;
  }
  return out;
}

GradedVector InducedModule::act(const GradedVector &u, long p, int n,
                                const GradedVector &x) const {
  if (n < 0 || n > built_levels_)
    throw UsageError("induced module: degree out of built range");
  if (u.is_zero())
    return GradedVector();
  if (!u.is_homogeneous())
    throw UsageError("act: mode of an inhomogeneous element");
  long wu = u.max_level();
  long target = (long)n + wu - p - 1;
  if (target < 0)
    return GradedVector();
  if (target > built_levels_)
    throw WeightRangeError((int)target, built_levels_);
  GradedVector xr = span_[n].reduce(x);
  if (xr.is_zero())
    return GradedVector();
  GradedVector y = star(algebra(), u, xr, 0, (int)target, n);
  return span_[target].reduce(y);
}

CheckReport induced_dims_report(const InducedModule &M) {
  CheckReport rep;
  rep.suite = "induced_dims";
  rep.params = {{"voa", M.algebra().name()},
                {"h", rational_str(M.bottom_weight())},
                {"built_levels", M.built_levels()},
                {"cutoff", M.cutoff()}};
  auto expect = ising_graded_dims(M.bottom_weight(), M.built_levels());
  for (int n = 0; n <= M.built_levels(); ++n) {
    std::ostringstream got;
    got << "dim " << M.dim(n) << ", expected " << expect[n];
    rep.record(M.dim(n) == expect[n], {{"degree", n}}, got.str());
  }
  return rep;
}

CheckReport vacuum_mode_suite(const InducedModule &M, int mode_range) {
  const Voa &V = M.algebra();
  CheckReport rep;
  rep.suite = "vacuum_mode";
  rep.params = {{"voa", V.name()},
                {"h", rational_str(M.bottom_weight())},
                {"mode_range", mode_range}};
  GradedVector vac = V.vacuum();
  for (long p = -mode_range; p <= mode_range; ++p)
    for (int n = 0; n <= M.built_levels(); ++n) {
      if (n - p - 1 > M.built_levels())
        continue;
      for (int i = 0; i < M.dim(n); ++i) {
        const GradedVector &x = M.basis_rep(n, i);
        GradedVector got = M.act(vac, p, n, x);
        GradedVector diff = got;
        if (p == -1)
          diff -= x;
        rep.record(diff.is_zero(),
                   {{"p", p}, {"degree", n}, {"basis", i}}, V.str(diff));
      }
    }
  return rep;
}

CheckReport commutator_suite(const InducedModule &M, std::uint64_t seed,
                             int trials, int max_wt, int mode_range) {
  const Voa &V = M.algebra();
  const GradedSpace &S = V.space();
  int built = M.built_levels();
  Sampler smp(seed);
  CheckReport rep;
  rep.suite = "commutator";
  rep.params = {{"voa", V.name()},
                {"h", rational_str(M.bottom_weight())},
                {"seed", seed},
                {"trials", trials},
                {"max_weight", max_wt},
                {"mode_range", mode_range}};
  for (int t = 0; t < trials; ++t) {
    int n = (int)smp.next_int(0, built);
    int wa = sample_level(smp, S, 1, max_wt);
    int wb = sample_level(smp, S, 1, max_wt);
    GradedVector a = sample_nonzero_homogeneous(smp, S, wa, 2);
    GradedVector b = sample_nonzero_homogeneous(smp, S, wb, 2);
    // mode exponents chosen so every intermediate degree stays built
    long plo = std::max<long>(-mode_range, n + wa - 1 - built);
    long p = smp.next_int(plo, mode_range);
    long qlo = std::max<long>(
        std::max<long>(-mode_range, n + wb - 1 - built),
        (long)n + wa + wb - 2 - built - p);
    long q = smp.next_int(qlo, mode_range);
    long n1 = n + wb - q - 1;
    long n2 = n + wa - p - 1;
    for (int xi = 0; xi < M.dim(n); ++xi) {
      const GradedVector &x = M.basis_rep(n, xi);
      GradedVector lhs;
      if (n1 >= 0) {
        GradedVector y = M.act(b, q, n, x);
        if (!y.is_zero())
          lhs += M.act(a, p, (int)n1, y);
      }
      if (n2 >= 0) {
        GradedVector z = M.act(a, p, n, x);
        if (!z.is_zero())
          lhs -= M.act(b, q, (int)n2, z);
      }
      GradedVector rhs;
      for (long i = 0; i < wa + wb; ++i) {
        Rational c = binom(p, i);
        if (c.is_zero())
          continue;
        GradedVector ab = V.mode(a, i, b);
        if (ab.is_zero())
          continue;
        rhs.add_scaled(M.act(ab, p + q - i, n, x), c);
      }
      GradedVector diff = lhs;
      diff -= rhs;
      rep.record(diff.is_zero(),
                 {{"a", V.str(a)},
                  {"b", V.str(b)},
                  {"p", p},
                  {"q", q},
                  {"degree", n},
                  {"basis", xi}},
                 V.str(diff));
    }
  }
  return rep;
}

} // namespace voabim
