#ifndef VOABIM_REPORT_HPP
#define VOABIM_REPORT_HPP

#include "voabim/state_space.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace voabim {

using ordered_json = nlohmann::ordered_json;

// Deterministic splitmix64 stream; the same seed reproduces the same trial
// inputs on every platform.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // uniform in [lo, hi]
  long next_int(long lo, long hi);
  // small nonzero rational: numerator in {-2,-1,1,2}, denominator in {1,2,3}
  Rational next_coeff();
  // sparse vector with `terms` sampled coordinates at levels <= top
  GradedVector next_vector(const GradedSpace &space, int top, int terms);
  // sampled combination of basis states at one level
  GradedVector next_homogeneous(const GradedSpace &space, int level, int terms);

private:
  std::uint64_t state_;
};

// weight in [lo, hi] with at least one basis state; throws when the whole
// range is empty
int sample_level(Sampler &smp, const GradedSpace &space, int lo, int hi);
// nonzero draws, retrying on accidental coefficient cancellation
GradedVector sample_nonzero_vector(Sampler &smp, const GradedSpace &space,
                                   int top, int terms);
GradedVector sample_nonzero_homogeneous(Sampler &smp, const GradedSpace &space,
                                        int level, int terms);

struct CheckFailure {
  ordered_json inputs;
  std::string residual;
};

// outcome of one verification suite
struct CheckReport {
  std::string suite;
  ordered_json params;
  int total = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
  void record(bool passed, ordered_json inputs, std::string residual);
  ordered_json to_json() const;
};

} // namespace voabim

#endif
