#include "voabim/identities.hpp"

#include <stdexcept>

namespace voabim {

static LaurentPoly zpow(int e) {
  return LaurentPoly::monomial({"z"}, {e, 0}, Rational(1));
}

bool verify_kernel_identity(int m, int n) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("verify_kernel_identity: levels must be >= 0");
  LaurentPoly acc({"z"});
  LaurentPoly one_plus_z_n1 = expand_binomial_power("z", n + 1, 0);
  for (int i = 0; i <= m; ++i) {
    Rational c = binom(n + i, i);
    if (i % 2)
      c = -c;
    acc += (one_plus_z_n1 * zpow(-n - i - 1)) * c;
  }
  for (int i = 0; i <= n; ++i) {
    Rational c = binom(m + i, i);
    if (m % 2)
      c = -c;
    acc -= (expand_binomial_power("z", i, 0) * zpow(-m - i - 1)) * c;
  }
  return acc == LaurentPoly::constant({"z"}, Rational(1));
}

bool verify_bivariate_kernel_vanishing(int n, int m) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("verify_bivariate_kernel_vanishing: levels must be >= 0");
  std::vector<std::string> vars = {"z1", "z2"};
  LaurentPoly acc(vars);
  for (int i = 0; i <= n; ++i) {
    Rational outer = binom(m + i, i);
    if (i % 2)
      outer = -outer;
    LaurentPoly bracket(vars);
    for (int j = 0; j <= n - i; ++j) {
      Rational cj = binom(-(long)m - i - 1, j);
      if (j % 2)
        cj = -cj;
      for (int l = 0; l <= i; ++l)
        bracket.add_term({-j - i, j + l}, cj * binom(i, l));
    }
    bracket.add_term({-i, 0}, Rational(-1));
    acc += bracket * outer;
  }
  return acc.is_zero();
}

bool verify_inverse_power_expansion(int k, int l) {
  if (l < 1 || k + 1 - l < 0)
    throw std::invalid_argument(
        "verify_inverse_power_expansion: need l >= 1 and k+1-l >= 0");
  LaurentPoly acc({"z"});
  for (int j = 0; j <= k + 1 - l; ++j) {
    Rational cj = binom(-(long)l, j);
    if (j % 2)
      cj = -cj;
    for (int i = 0; i <= k + 1 - l - j; ++i) {
      Rational ci = binom(l + i + j - 1, i);
      if (i % 2)
        ci = -ci;
      acc.add_term({-(i + j + l), 0}, cj * ci);
    }
  }
  return acc == LaurentPoly::monomial({"z"}, {-l, 0}, Rational(1));
}

bool verify_vandermonde_vanishing(int n, int m, int p, int k) {
  if (k < 1 || k > p)
    throw std::invalid_argument("verify_vandermonde_vanishing: need 1 <= k <= p");
  long t = (long)n + m - p;
  Rational acc(0);
  for (int i = 0; i <= k; ++i)
    acc += binom(t + i, i) * binom(-t - i - 1, k - i);
  return acc.is_zero();
}

std::vector<std::vector<int>> kernel_identity_grid(int max_m, int max_n) {
  std::vector<std::vector<int>> bad;
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n)
      if (!verify_kernel_identity(m, n))
        bad.push_back({m, n});
  return bad;
}

std::vector<std::vector<int>> bivariate_kernel_grid(int max_n, int max_m) {
  std::vector<std::vector<int>> bad;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m)
      if (!verify_bivariate_kernel_vanishing(n, m))
        bad.push_back({n, m});
  return bad;
}

std::vector<std::vector<int>> inverse_power_grid(int max_k, int max_l) {
  std::vector<std::vector<int>> bad;
  for (int l = 1; l <= max_l; ++l)
    for (int k = l - 1; k <= max_k; ++k)
      if (!verify_inverse_power_expansion(k, l))
        bad.push_back({k, l});
  return bad;
}

std::vector<std::vector<int>> vandermonde_grid(int max_n, int max_m, int max_p) {
  std::vector<std::vector<int>> bad;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m)
      for (int p = 1; p <= max_p; ++p)
        for (int k = 1; k <= p; ++k)
          if (!verify_vandermonde_vanishing(n, m, p, k))
            bad.push_back({n, m, p, k});
  return bad;
}

} // namespace voabim
