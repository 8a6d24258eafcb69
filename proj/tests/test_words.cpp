#include <gtest/gtest.h>

#include "thuemorse/random.hpp"
#include "thuemorse/words.hpp"

namespace thuemorse {
namespace {

constexpr unsigned kTrials = 200;

// Independent oracle: iterate theta from x_0 until the word is long enough.
Word brute_prefix(Alphabet alphabet, std::size_t n) {
  Word w = Word::generator(0);
  while (w.size() < n) w = theta(w, alphabet);
  return Word(std::vector<Letter>(w.begin(), w.begin() + static_cast<long>(n)));
}

TEST(Words, PrefixMatchesThetaIteration) {
  for (unsigned q = 2; q <= 5; ++q) {
    const Alphabet a(q);
    for (std::size_t n : {0u, 1u, 2u, 7u, 64u, 300u}) EXPECT_EQ(tm_prefix(a, n), brute_prefix(a, n)) << q;
  }
}

TEST(Words, ClassicThueMorsePrefix) {
  EXPECT_EQ(to_string(tm_prefix(Alphabet(2), 8)), "x0 x1 x1 x0 x1 x0 x0 x1");
}

TEST(Words, ThetaOfGenerators) {
  const Alphabet a(3);
  EXPECT_EQ(to_string(theta(Word::generator(1), a)), "x1 x2 x0");
  EXPECT_EQ(to_string(theta(Word{{2, true}}, a)), "x1^-1 x0^-1 x2^-1");
}

TEST(Words, GammaShiftsIndicesAndKeepsSigns) {
  const Alphabet a(3);
  EXPECT_EQ(to_string(gamma(parse_word("x0 x2^-1", a), a)), "x1 x0^-1");
  EXPECT_EQ(to_string(gamma(parse_word("x0", a), a, -1)), "x2");
}

TEST(Words, ParseCommutatorAndPowers) {
  const Alphabet a(2);
  EXPECT_EQ(parse_word("[x0,x1]", a), parse_word("x0^-1 x1^-1 x0 x1", a));
  EXPECT_EQ(parse_word("(x0 x1)^2", a), parse_word("x0 x1 x0 x1", a));
  EXPECT_TRUE(parse_word("1", a).empty());
  EXPECT_THROW(parse_word("x2", a), InvalidLetter);
  EXPECT_THROW(parse_word("x0 (", a), ParseError);
}

// ---------------------------------------------------------------- properties

TEST(WordProperties, ToStringRoundTrips) {
  Rng rng(1);
  for (unsigned q = 2; q <= 4; ++q)
    for (unsigned i = 0; i < kTrials; ++i) {
      const Word w = random_word(rng, Alphabet(q), 10);
      EXPECT_EQ(parse_word(to_string(w), Alphabet(q)), w) << to_string(w);
    }
}

TEST(WordProperties, FreeReductionIsIdempotentAndShortening) {
  Rng rng(2);
  for (unsigned i = 0; i < kTrials; ++i) {
    const Word w = random_word(rng, Alphabet(2), 16);
    const Word r = free_reduce(w);
    EXPECT_TRUE(is_freely_reduced(r));
    EXPECT_EQ(free_reduce(r), r);
    EXPECT_LE(r.size(), w.size());
    EXPECT_TRUE(free_reduce(w * w.inverse()).empty());
  }
}

TEST(WordProperties, ReducedProductAgreesWithReduce) {
  Rng rng(3);
  for (unsigned i = 0; i < kTrials; ++i) {
    const Word u = free_reduce(random_word(rng, Alphabet(3), 8));
    const Word v = free_reduce(random_word(rng, Alphabet(3), 8));
    EXPECT_EQ(reduced_product(u, v), free_reduce(u * v));
  }
}

TEST(WordProperties, ThetaIsAHomomorphism) {
  Rng rng(4);
  for (unsigned q = 2; q <= 4; ++q) {
    const Alphabet a(q);
    for (unsigned i = 0; i < kTrials; ++i) {
      const Word u = random_word(rng, a, 6);
      const Word v = random_word(rng, a, 6);
      EXPECT_EQ(theta(u * v, a), theta(u, a) * theta(v, a));
      EXPECT_EQ(free_reduce(theta(u.inverse(), a) * theta(u, a)), Word{});
    }
  }
}

TEST(WordProperties, GammaCommutesWithThetaAndHasOrderQ) {
  Rng rng(5);
  for (unsigned q = 2; q <= 5; ++q) {
    const Alphabet a(q);
    for (unsigned i = 0; i < kTrials; ++i) {
      const Word w = random_word(rng, a, 8);
      EXPECT_EQ(gamma(theta(w, a), a), theta(gamma(w, a), a));
      EXPECT_EQ(gamma(w, a, q), w);
    }
  }
}

TEST(WordProperties, PrefixIsStableUnderTheta) {
  for (unsigned q = 2; q <= 4; ++q) {
    const Alphabet a(q);
    const Word p = tm_prefix(a, 40);
    const Word t = theta(p, a);
    EXPECT_EQ(tm_prefix(a, t.size()), t);
  }
}

}  // namespace
}  // namespace thuemorse
