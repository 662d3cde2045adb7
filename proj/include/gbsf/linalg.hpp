#pragma once

#include <cstdint>
#include <vector>

#include "gbsf/rational.hpp"

namespace gbsf {

// Dense exact rational matrix, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact rank via fraction-free (Bareiss) elimination on an integerized copy.
int rank_exact(const RationalMatrix& m);

// Rank over F_p with p = 2^61 - 1. Always a lower bound for the rational
// rank; used as a cheap screen, never as the certified answer.
int rank_mod_p(const RationalMatrix& m);

}  // namespace gbsf
