#ifndef VOABIM_CHARACTERS_HPP
#define VOABIM_CHARACTERS_HPP

#include "voabim/rational.hpp"

#include <vector>

namespace voabim {

// Graded dimension series, computed by counting arguments only. These are
// the reference values the state space constructions are tested against.

// Coefficients 0..max_level of prod_{n >= min_part} 1/(1 - q^n), the level
// dimensions of a space with one free generator mode per degree.
std::vector<long> free_graded_dims(int min_part, int max_level);

// Bottom conformal weight of the (r, s) entry of the (p, pp) minimal series.
Rational minimal_model_weight(int p, int pp, int r, int s);

// Level dimensions of the irreducible (r, s) module of the (p, pp) minimal
// series, normalized to the bottom vector: the free series times an
// alternating sum over the lattice of nested singular submodules.
std::vector<long> minimal_model_graded_dims(int p, int pp, int r, int s,
                                            int max_level);

// The three irreducible modules at central charge 1/2, keyed by bottom
// weight h in {0, 1/2, 1/16}.
std::vector<long> ising_graded_dims(const Rational &h, int max_level);

} // namespace voabim

#endif
