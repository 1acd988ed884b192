#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "voabim/bimodule.hpp"
#include "voabim/report.hpp"

#include <memory>

using namespace voabim;

static std::shared_ptr<Voa> shared_heis(int w) {
  static std::map<int, std::shared_ptr<Voa>> cache;
  auto it = cache.find(w);
  if (it == cache.end())
    it = cache.emplace(w, std::make_shared<Voa>(Voa::heisenberg(w))).first;
  return it->second;
}

TEST_CASE("vacuum star scalars") {
  // identity row: p = n collapses the sum to 1
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      CHECK(vacuum_star_scalar(m, n, n) == Rational(1));
  // the delta law behind the one-sided vacuum product
  for (int n = 0; n <= 8; ++n)
    for (int p = -1; p < n; ++p)
      CHECK(vacuum_star_scalar(0, n - p - 1, n) ==
            (p == -1 ? Rational(1) : Rational()));
}

TEST_CASE("products against a vacuum factor") {
  auto V = shared_heis(12);
  Sampler smp(23);
  GradedVector vac = V->vacuum();
  for (int t = 0; t < 40; ++t) {
    int wy = sample_level(smp, V->space(), 0, 3);
    GradedVector y = sample_nonzero_homogeneous(smp, V->space(), wy, 2);
    int m = (int)smp.next_int(0, 3), n = (int)smp.next_int(0, 3);
    int p = (int)smp.next_int(0, 3);
    CHECK(star(*V, vac, y, m, n, p) == y.scaled(vacuum_star_scalar(m, n, p)));
    CHECK(star_bar(*V, vac, y, m, n) == y);
    // vacuum on the right at p = 0: a binomial-weighted sum of modes on |0>
    GradedVector rhs;
    for (int j = 0; j <= n; ++j)
      rhs.add_scaled(V->mode(y, j - n - 1, vac), binom(wy, j));
    CHECK(star(*V, y, vac, 0, n, 0) == rhs);
  }
}

TEST_CASE("residue product weight support") {
  auto V = shared_heis(12);
  Sampler smp(31);
  for (int t = 0; t < 30; ++t) {
    int wu = sample_level(smp, V->space(), 0, 3);
    int wv = sample_level(smp, V->space(), 0, 3);
    GradedVector u = sample_nonzero_homogeneous(smp, V->space(), wu, 2);
    GradedVector v = sample_nonzero_homogeneous(smp, V->space(), wv, 2);
    int b = (int)smp.next_int(0, 4);
    GradedVector r = residue_product(*V, u, v, (int)smp.next_int(0, 3), b);
    if (!r.is_zero())
      CHECK(r.max_level() <= wu + wv + b - 1);
  }
}

TEST_CASE("closing identities on small grids") {
  auto H = shared_heis(12);
  CheckReport a = lshift_star_bar_grid(*H, 3, 2);
  CHECK(a.total > 0);
  CHECK(a.ok());
  CheckReport b = lshift_star_grid(*H, 3, 2);
  CHECK(b.ok());

  auto U = std::make_shared<Voa>(Voa::virasoro_universal(Rational(1, 2), 13));
  CHECK(lshift_star_bar_grid(*U, 4, 2).ok());
  CHECK(lshift_star_grid(*U, 4, 2).ok());
}

TEST_CASE("shift rows and round products land in the declared subspace") {
  auto V = shared_heis(12);
  OSpaces os(V);
  Sampler smp(47);
  for (int t = 0; t < 20; ++t) {
    int wu = sample_level(smp, V->space(), 1, 2);
    int wv = sample_level(smp, V->space(), 0, 2);
    GradedVector u = sample_nonzero_homogeneous(smp, V->space(), wu, 2);
    GradedVector v = sample_nonzero_homogeneous(smp, V->space(), wv, 2);
    int m = (int)smp.next_int(0, 1), n = (int)smp.next_int(0, 1);
    CHECK(os.in_prime(l_shift(*V, u, m, n), n, m, 8));
    CHECK(os.in_prime(circle(*V, u, v, m, n), n, m, 8));
  }
}

TEST_CASE("vacuum class membership depends on the level pair") {
  auto V = shared_heis(12);
  OSpaces os(V);
  // off the diagonal the vacuum is a shift row, on the diagonal it survives
  CHECK(os.in_prime(V->vacuum(), 1, 0, 8));
  CHECK(os.in_prime(V->vacuum(), 0, 1, 8));
  CHECK(!os.in_prime(V->vacuum(), 0, 0, 8));
  CHECK(!os.in_prime(V->vacuum(), 1, 1, 8));
}

TEST_CASE("sampled structural suites") {
  auto V = shared_heis(12);
  OSpaces os(V);
  CheckReport sw = swap_suite(os, 101, 40, 3, 2);
  CHECK(sw.total >= 40);
  CHECK(sw.ok());
  CHECK(stability_suite(os, 102, 40, 3, 2).ok());
  CHECK(phi_suite(os, 103, 40, 3, 2).ok());
  CHECK(descent_suite(os, 104, 40, 3, 2).ok());
  CHECK(psi_balance_suite(os, 105, 40, 3, 2).ok());
}

TEST_CASE("diagonal quotient of the free boson keeps growing") {
  // the degree-zero quotient is a polynomial algebra, so truncated
  // dimensions climb without stabilizing
  auto V = shared_heis(12);
  OSpaces os(V);
  QuotientReport r2 = quotient_report(os, 0, 0, 2);
  QuotientReport r4 = quotient_report(os, 0, 0, 4);
  QuotientReport r6 = quotient_report(os, 0, 0, 6);
  CHECK(r2.dim == 3);
  CHECK(r4.dim == 5);
  CHECK(r6.dim == 7);
  CHECK(!r6.stabilized);

  ordered_json j = r4.to_json();
  CHECK(j["n"] == 0);
  CHECK(j["cutoff"] == 4);
  CHECK(j["dim"] == 5);
  CHECK(j["ambient"] == os.ambient_dim(4));
}

TEST_CASE("full span never exceeds ambient and contains the prime span") {
  auto V = shared_heis(12);
  OSpaces os(V);
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= 1; ++m) {
      const OSpan &pr = os.prime(n, m, 8);
      const OSpan &fu = os.full(n, m, 8);
      CHECK(pr.basis.rank() <= fu.basis.rank());
      CHECK(fu.basis.rank() <= os.ambient_dim(8));
      for (const GradedVector &row : pr.basis.rows())
        CHECK(fu.basis.contains(row));
    }
}
