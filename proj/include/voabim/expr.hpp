#ifndef VOABIM_EXPR_HPP
#define VOABIM_EXPR_HPP

#include "voabim/voa.hpp"

#include <string>

namespace voabim {

// Exact rational literal, "7", "-3/4". Throws UsageError on anything else.
Rational parse_rational(const std::string &text);

// Parse a linear combination of generator monomials applied to the vacuum
// and evaluate it in the graded space of the algebra, for example
//   a(-1)a(-1)vac - 2 a(-2)vac        (rank-1 boson)
//   1/2 L(-2)vac + L(-3)vac          (virasoro)
// Generator names must match the algebra and mode arguments must be
// negative creation modes. Errors carry the offending position.
GradedVector parse_element(const Voa &voa, const std::string &text);

} // namespace voabim

#endif
