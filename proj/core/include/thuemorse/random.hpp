#pragma once

// Seeded generators of random words and elements, shared by the property
// checks of the verify suite and the test programs.

#include <random>

#include "thuemorse/algebra.hpp"
#include "thuemorse/words.hpp"

namespace thuemorse {

using Rng = std::mt19937;

/// Uniform length in [0, max_length], uniform letters; inverse letters only
/// when allow_inverse.
Word random_word(Rng& rng, Alphabet alphabet, unsigned max_length, bool allow_inverse = true);

/// 1..max_terms terms with nonzero integer coefficients in [-max_coeff, max_coeff]
/// (the sum may still cancel to zero).
Element random_element(Rng& rng, const Algebra& algebra, unsigned max_terms,
                       unsigned max_length, int max_coeff = 3);

}  // namespace thuemorse
