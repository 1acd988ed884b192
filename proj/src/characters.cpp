#include "voabim/characters.hpp"

#include "voabim/errors.hpp"

namespace voabim {

std::vector<long> free_graded_dims(int min_part, int max_level) {
  if (min_part < 1 || max_level < 0)
    throw UsageError("free_graded_dims: need min_part >= 1, max_level >= 0");
  std::vector<long> dp(max_level + 1, 0);
  dp[0] = 1;
  for (int n = min_part; n <= max_level; ++n)
    for (int m = n; m <= max_level; ++m)
      dp[m] += dp[m - n];
  return dp;
}

static void check_labels(int p, int pp, int r, int s) {
  if (p < 2 || pp < 2 || p == pp)
    throw UsageError("minimal series: need distinct p, pp >= 2");
  if (r < 1 || r >= p || s < 1 || s >= pp)
    throw UsageError("minimal series: labels out of range");
}

Rational minimal_model_weight(int p, int pp, int r, int s) {
  check_labels(p, pp, r, s);
  long a = (long)p * r - (long)pp * s;
  long d = (long)p - pp;
  return Rational(a * a - d * d, 4L * p * pp);
}

std::vector<long> minimal_model_graded_dims(int p, int pp, int r, int s,
                                            int max_level) {
  check_labels(p, pp, r, s);
  if (max_level < 0)
    throw UsageError("minimal_model_graded_dims: negative level");
  // numerator exponents: ppp k^2 + k (pr - pps) keeps a term, the paired
  // exponent ppp k^2 + k (pr + pps) + rs cancels one
  std::vector<long> num(max_level + 1, 0);
  long ppp = (long)p * pp;
  for (long k = -(long)max_level - 1; k <= (long)max_level + 1; ++k) {
    long a = ppp * k * k + k * ((long)p * r - (long)pp * s);
    long b = ppp * k * k + k * ((long)p * r + (long)pp * s) + (long)r * s;
    if (a >= 0 && a <= max_level)
      num[a] += 1;
    if (b >= 0 && b <= max_level)
      num[b] -= 1;
  }
  std::vector<long> free_dims = free_graded_dims(1, max_level);
  std::vector<long> out(max_level + 1, 0);
  for (int n = 0; n <= max_level; ++n)
    for (int m = 0; m <= n; ++m)
      out[n] += num[m] * free_dims[n - m];
  return out;
}

std::vector<long> ising_graded_dims(const Rational &h, int max_level) {
  int r, s;
  if (h == Rational(0)) {
    r = 1;
    s = 1;
  } else if (h == Rational(1, 2)) {
    r = 1;
    s = 2;
  } else if (h == Rational(1, 16)) {
    r = 2;
    s = 1;
  } else {
    throw UsageError("ising_graded_dims: bottom weight must be 0, 1/2 or 1/16");
  }
  return minimal_model_graded_dims(3, 4, r, s, max_level);
}

} // namespace voabim
