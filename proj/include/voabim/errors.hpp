#ifndef VOABIM_ERRORS_HPP
#define VOABIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace voabim {

// A computation needed basis data above the constructed weight range.
// Carries the weight that would have been required so callers can rebuild.
class WeightRangeError : public std::runtime_error {
public:
  WeightRangeError(int needed, int built)
      : std::runtime_error("weight range exceeded: computation needs weight " +
                           std::to_string(needed) + " but the space is built to " +
                           std::to_string(built) + "; rebuild with --max-weight >= " +
                           std::to_string(needed)),
        needed_(needed), built_(built) {}
  int needed_weight() const { return needed_; }
  int built_weight() const { return built_; }

private:
  int needed_, built_;
};

// Bad user input: unparsable element, unknown flag value, malformed config.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string &what) : std::runtime_error(what) {}
};

// Internal consistency violation (mismatched spaces, broken invariant).
class InvariantError : public std::logic_error {
public:
  explicit InvariantError(const std::string &what) : std::logic_error(what) {}
};

} // namespace voabim

#endif
