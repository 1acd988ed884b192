#include "voabim/report.hpp"

namespace voabim {

std::uint64_t Sampler::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Sampler::next_int(long lo, long hi) {
  if (hi < lo)
    throw std::invalid_argument("Sampler: empty range");
  return lo + (long)(next_u64() % (std::uint64_t)(hi - lo + 1));
}

Rational Sampler::next_coeff() {
  static const long nums[4] = {-2, -1, 1, 2};
  long num = nums[next_int(0, 3)];
  long den = next_int(1, 3);
  return Rational(num, den);
}

GradedVector Sampler::next_vector(const GradedSpace &space, int top, int terms) {
  GradedVector v = space.zero();
  for (int t = 0; t < terms; ++t) {
    int level = (int)next_int(0, top);
    if (space.dim(level) == 0)
      continue;
    int idx = (int)next_int(0, space.dim(level) - 1);
    v.add(level, idx, next_coeff());
  }
  return v;
}

GradedVector Sampler::next_homogeneous(const GradedSpace &space, int level,
                                       int terms) {
  GradedVector v = space.zero();
  if (space.dim(level) == 0)
    return v;
  for (int t = 0; t < terms; ++t) {
    int idx = (int)next_int(0, space.dim(level) - 1);
    v.add(level, idx, next_coeff());
  }
  return v;
}

int sample_level(Sampler &smp, const GradedSpace &space, int lo, int hi) {
  bool any = false;
  for (int w = lo; w <= hi && !any; ++w)
    any = space.dim(w) > 0;
  if (!any)
    throw std::invalid_argument("sample_level: range contains no states");
  for (;;) {
    int w = (int)smp.next_int(lo, hi);
    if (space.dim(w) > 0)
      return w;
  }
}

GradedVector sample_nonzero_vector(Sampler &smp, const GradedSpace &space,
                                   int top, int terms) {
  for (;;) {
    GradedVector v = smp.next_vector(space, top, terms);
    if (!v.is_zero())
      return v;
  }
}

GradedVector sample_nonzero_homogeneous(Sampler &smp, const GradedSpace &space,
                                        int level, int terms) {
  if (space.dim(level) == 0)
    throw std::invalid_argument("sample_nonzero_homogeneous: empty level");
  for (;;) {
    GradedVector v = smp.next_homogeneous(space, level, terms);
    if (!v.is_zero())
      return v;
  }
}

void CheckReport::record(bool passed, ordered_json inputs, std::string residual) {
  ++total;
  if (!passed)
    failures.push_back({std::move(inputs), std::move(residual)});
}

ordered_json CheckReport::to_json() const {
  ordered_json j;
  j["suite"] = suite;
  j["params"] = params;
  j["trials"] = total;
  j["failures"] = ordered_json::array();
  for (const CheckFailure &f : failures) {
    ordered_json jf;
    jf["inputs"] = f.inputs;
    jf["residual"] = f.residual;
    j["failures"].push_back(jf);
  }
  j["ok"] = ok();
  return j;
}

} // namespace voabim
