#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "voabim/report.hpp"
#include "voabim/voa.hpp"

#include <set>
#include <stdexcept>

using namespace voabim;

TEST_CASE("sampler streams are reproducible") {
  Sampler a(42), b(42), c(43);
  bool diverged = false;
  for (int i = 0; i < 50; ++i) {
    auto x = a.next_u64();
    CHECK(x == b.next_u64());
    if (x != c.next_u64())
      diverged = true;
  }
  CHECK(diverged);
}

TEST_CASE("integer draws stay in range and reach both endpoints") {
  Sampler smp(7);
  std::set<long> seen;
  for (int i = 0; i < 300; ++i) {
    long v = smp.next_int(-2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
    seen.insert(v);
  }
  CHECK(seen.count(-2) == 1);
  CHECK(seen.count(2) == 1);
  CHECK(smp.next_int(5, 5) == 5);
}

TEST_CASE("coefficient draws come from the declared pool") {
  Sampler smp(11);
  std::set<std::string> allowed;
  for (int num : {-2, -1, 1, 2})
    for (int den : {1, 2, 3})
      allowed.insert(Rational(num, den).str());
  for (int i = 0; i < 200; ++i) {
    Rational c = smp.next_coeff();
    CHECK(!c.is_zero());
    CHECK(allowed.count(c.str()) == 1);
  }
}

TEST_CASE("vector draws respect the requested support") {
  Voa H = Voa::heisenberg(8);
  Sampler smp(13);
  for (int t = 0; t < 40; ++t) {
    GradedVector v = sample_nonzero_vector(smp, H.space(), 4, 3);
    CHECK(!v.is_zero());
    CHECK(v.max_level() <= 4);
    GradedVector h = sample_nonzero_homogeneous(smp, H.space(), 3, 2);
    CHECK(h.is_homogeneous());
    CHECK(h.min_level() == 3);
  }
}

TEST_CASE("level sampling skips empty levels and rejects empty ranges") {
  Voa U = Voa::virasoro_universal(Rational(1, 2), 8);
  Sampler smp(17);
  // level 1 is empty for a vacuum algebra without weight-one states
  for (int t = 0; t < 20; ++t) {
    int l = sample_level(smp, U.space(), 0, 3);
    CHECK(U.space().dim(l) > 0);
  }
  CHECK_THROWS_AS(sample_level(smp, U.space(), 1, 1), std::invalid_argument);
}

TEST_CASE("check report bookkeeping") {
  CheckReport r;
  r.suite = "demo";
  r.params = ordered_json{{"trials", 3}};
  r.record(true, ordered_json{{"i", 0}}, "");
  r.record(false, ordered_json{{"i", 1}}, "residual 2/3");
  r.record(true, ordered_json{{"i", 2}}, "");
  CHECK(r.total == 3);
  CHECK(!r.ok());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].inputs["i"] == 1);
  CHECK(r.failures[0].residual == "residual 2/3");

  ordered_json j = r.to_json();
  CHECK(j["suite"] == "demo");
  CHECK(j["trials"] == 3);
  CHECK(j["failures"].size() == 1);
  CHECK(j["ok"] == false);
}
