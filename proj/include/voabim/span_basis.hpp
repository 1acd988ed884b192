#ifndef VOABIM_SPAN_BASIS_HPP
#define VOABIM_SPAN_BASIS_HPP

#include "voabim/graded_vector.hpp"

#include <map>
#include <utility>
#include <vector>

namespace voabim {

// Incrementally built reduced echelon basis of a subspace, exact over the
// rationals. Pivots are chosen as the highest (level, index) coordinate of
// each reduced row, so reduction rewrites a vector in terms of low-weight
// coordinates and canonical coset representatives stay at low weight.
class SpanBasis {
public:
  explicit SpanBasis(int space_id) : space_id_(space_id) {}

  int space_id() const { return space_id_; }
  int rank() const { return (int)rows_.size(); }
  const std::vector<GradedVector> &rows() const { return rows_; }
  const std::vector<std::pair<int, int>> &pivots() const { return pivots_; }

  // residual of v after reduction against the current rows
  GradedVector reduce(const GradedVector &v) const;
  bool contains(const GradedVector &v) const { return reduce(v).is_zero(); }
  // true if v enlarged the span
  bool insert(const GradedVector &v);

private:
  int space_id_;
  std::vector<GradedVector> rows_;
  std::vector<std::pair<int, int>> pivots_;
  std::map<std::pair<int, int>, int> pivot_to_row_;
};

} // namespace voabim

#endif
