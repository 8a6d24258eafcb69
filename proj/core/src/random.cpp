#include "thuemorse/random.hpp"

namespace thuemorse {

Word random_word(Rng& rng, Alphabet alphabet, unsigned max_length, bool allow_inverse) {
  std::uniform_int_distribution<unsigned> length(0, max_length);
  std::uniform_int_distribution<unsigned> gen(0, alphabet.size() - 1);
  std::bernoulli_distribution inverse(0.5);
  Word w;
  for (unsigned n = length(rng); n > 0; --n) w.push_back(Letter{gen(rng), allow_inverse && inverse(rng)});
  return w;
}

Element random_element(Rng& rng, const Algebra& algebra, unsigned max_terms,
                       unsigned max_length, int max_coeff) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<int> coeff(1, max_coeff);
  std::bernoulli_distribution negative(0.5);
  const bool inverses = algebra.mode() == Mode::B;
  Element e = algebra.zero();
  for (unsigned n = terms(rng); n > 0; --n) {
    Word w = random_word(rng, algebra.alphabet(), max_length, inverses);
    int c = coeff(rng);
    e.add(w, negative(rng) ? -c : c);
  }
  return e;
}

}  // namespace thuemorse
