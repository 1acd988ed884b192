#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "voabim/characters.hpp"
#include "voabim/errors.hpp"
#include "voabim/report.hpp"
#include "voabim/vmodule.hpp"

#include <memory>

using namespace voabim;

TEST_CASE("free boson module modes match the normal-ordered closed form") {
  auto H = std::make_shared<Voa>(Voa::heisenberg(12));
  for (Rational lam : {Rational(0), Rational(1), Rational(1, 2)}) {
    VModule M = VModule::fock(H, lam, 6);
    // exhaustive on a small box
    for (int wu = 0; wu <= 3; ++wu)
      for (int iu = 0; iu < H->space().dim(wu); ++iu) {
        GradedVector u = H->space().unit(wu, iu);
        for (int lw = 0; lw <= 2; ++lw)
          for (int iw = 0; iw < M.space().dim(lw); ++iw) {
            GradedVector w = M.space().unit(lw, iw);
            for (long k = -2; k <= wu + lw; ++k)
              CHECK(M.mode(u, k, w) == fock_mode_oracle(M, u, k, w));
          }
      }
    // random combinations exercise bilinearity of both sides
    Sampler smp(777);
    for (int t = 0; t < 25; ++t) {
      int wu = sample_level(smp, H->space(), 0, 4);
      GradedVector u = sample_nonzero_homogeneous(smp, H->space(), wu, 2);
      int lw = sample_level(smp, M.space(), 0, 3);
      GradedVector w = sample_nonzero_homogeneous(smp, M.space(), lw, 2);
      // keep the landing level within the built range
      long k = smp.next_int(std::max<long>(-2, wu + lw - 1 - M.max_level()),
                            wu + lw - 1);
      CHECK(M.mode(u, k, w) == fock_mode_oracle(M, u, k, w));
    }
  }
}

TEST_CASE("module graded dimensions") {
  auto H = std::make_shared<Voa>(Voa::heisenberg(10));
  VModule F = VModule::fock(H, Rational(3), 6);
  auto p1 = free_graded_dims(1, 6);
  for (int l = 0; l <= 6; ++l)
    CHECK(F.space().dim(l) == p1[l]);

  auto U = std::make_shared<Voa>(Voa::virasoro_universal(Rational(7, 3), 10));
  VModule W = VModule::highest_weight(U, Rational(7, 3), 5);
  for (int l = 0; l <= 5; ++l)
    CHECK(W.space().dim(l) == p1[l]);

  auto I = std::make_shared<Voa>(Voa::ising(10));
  for (Rational h : {Rational(0), Rational(1, 2), Rational(1, 16)}) {
    VModule L = VModule::ising_irreducible(I, h, 6);
    auto ref = ising_graded_dims(h, 6);
    for (int l = 0; l <= 6; ++l)
      CHECK(L.space().dim(l) == ref[l]);
  }
}

TEST_CASE("zero mode of the vacuum and of the conformal vector") {
  auto I = std::make_shared<Voa>(Voa::ising(10));
  for (Rational h : {Rational(0), Rational(1, 2), Rational(1, 16)}) {
    VModule L = VModule::ising_irreducible(I, h, 4);
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int i = 0; i < L.space().dim(m); ++i) {
          GradedVector w = L.space().unit(m, i);
          GradedVector r = L.o_map(I->vacuum(), n, m, w);
          CHECK(r == (n == m ? w : GradedVector()));
        }
    // the level operator acts on level l by h + l
    for (int l = 0; l <= 3; ++l)
      for (int i = 0; i < L.space().dim(l); ++i) {
        GradedVector w = L.space().unit(l, i);
        CHECK(L.o_map(I->omega(), l, l, w) == w.scaled(h + Rational(l)));
      }
  }
}

TEST_CASE("level transfer composes through intermediate products") {
  auto H = std::make_shared<Voa>(Voa::heisenberg(13));
  VModule M = VModule::fock(H, Rational(1, 2), 5);
  CheckReport r = compose_grid(M, 3, 2);
  CHECK(r.total > 0);
  CHECK(r.ok());

  auto I = std::make_shared<Voa>(Voa::ising(12));
  VModule L = VModule::ising_irreducible(I, Rational(1, 16), 5);
  CHECK(compose_grid(L, 3, 2).ok());
}

TEST_CASE("declared annihilators act by zero") {
  auto H = std::make_shared<Voa>(Voa::heisenberg(13));
  VModule M = VModule::fock(H, Rational(1), 5);
  CheckReport r = annihilation_suite(M, 314, 60, 2, 1);
  CHECK(r.total >= 60);
  CHECK(r.ok());
}

TEST_CASE("lowered states die at the declared depth and not before") {
  auto H = std::make_shared<Voa>(Voa::heisenberg(12));
  VModule M = VModule::fock(H, Rational(1, 2), 5);
  CHECK(omega_suite(M, 55, 40, 2, 2).ok());

  auto I = std::make_shared<Voa>(Voa::ising(12));
  VModule L = VModule::ising_irreducible(I, Rational(1, 2), 5);
  CHECK(omega_suite(L, 56, 40, 2, 2).ok());
}

TEST_CASE("module construction guards") {
  auto U = std::make_shared<Voa>(Voa::virasoro_universal(Rational(1, 2), 8));
  CHECK_THROWS_AS(VModule::fock(U, Rational(1), 4), UsageError);
  auto H = std::make_shared<Voa>(Voa::heisenberg(8));
  CHECK_THROWS_AS(VModule::highest_weight(H, Rational(1), 4), UsageError);
  CHECK_THROWS_AS(VModule::ising_irreducible(H, Rational(0), 4), UsageError);
  CHECK_THROWS_AS(VModule::ising_irreducible(
                      std::make_shared<Voa>(Voa::ising(8)), Rational(1, 3), 4),
                  UsageError);
}
