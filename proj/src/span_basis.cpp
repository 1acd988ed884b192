#include "voabim/span_basis.hpp"

#include "voabim/errors.hpp"

namespace voabim {

GradedVector SpanBasis::reduce(const GradedVector &v) const {
  if (v.space_id() != -1 && v.space_id() != space_id_)
    throw InvariantError("SpanBasis: vector belongs to a different space");
  GradedVector r = v;
  // rows carry zeros at every other pivot, so one pass in any order suffices
  for (const auto &[piv, rowidx] : pivot_to_row_) {
    if (r.is_zero())
      break;
    Rational c = r.coeff(piv.first, piv.second);
    if (!c.is_zero())
      r.add_scaled(rows_[rowidx], -c);
  }
  return r;
}

bool SpanBasis::insert(const GradedVector &v) {
  GradedVector r = reduce(v);
  if (r.is_zero())
    return false;
  // pivot on the highest coordinate so reduction rewrites vectors downward
  std::pair<int, int> piv = r.terms().rbegin()->first;
  r.scale(Rational(1) / r.coeff(piv.first, piv.second));
  for (GradedVector &row : rows_) {
    Rational c = row.coeff(piv.first, piv.second);
    if (!c.is_zero())
      row.add_scaled(r, -c);
  }
  pivot_to_row_.emplace(piv, (int)rows_.size());
  pivots_.push_back(piv);
  rows_.push_back(std::move(r));
  return true;
}

} // namespace voabim
