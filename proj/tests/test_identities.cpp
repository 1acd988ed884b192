#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "voabim/identities.hpp"

using namespace voabim;

TEST_CASE("kernel identity on a grid") {
  auto bad = kernel_identity_grid(5, 5);
  CHECK(bad.empty());
  // asymmetric corners
  CHECK(verify_kernel_identity(0, 7));
  CHECK(verify_kernel_identity(7, 0));
}

TEST_CASE("bivariate kernel vanishing on a grid") {
  auto bad = bivariate_kernel_grid(4, 4);
  CHECK(bad.empty());
  CHECK(verify_bivariate_kernel_vanishing(5, 2));
}

TEST_CASE("inverse power expansion") {
  auto bad = inverse_power_grid(9, 4);
  CHECK(bad.empty());
  // boundary k = l - 1 gives the one-term expansion
  CHECK(verify_inverse_power_expansion(0, 1));
  CHECK(verify_inverse_power_expansion(3, 4));
}

TEST_CASE("alternating Vandermonde sum vanishes") {
  auto bad = vandermonde_grid(3, 3, 3);
  CHECK(bad.empty());
  CHECK(verify_vandermonde_vanishing(0, 0, 1, 1));
  CHECK(verify_vandermonde_vanishing(4, 1, 3, 2));
}

TEST_CASE("grid enumeration covers the announced ranges") {
  // failure tuples are reported with their parameters, so an empty result on
  // a grid of known size is meaningful only if the loops really ran; count
  // indirectly by verifying single cells at the extreme corners
  CHECK(verify_kernel_identity(5, 5));
  CHECK(verify_bivariate_kernel_vanishing(4, 4));
  CHECK(verify_inverse_power_expansion(9, 4));
  CHECK(verify_vandermonde_vanishing(3, 3, 3, 3));
}
