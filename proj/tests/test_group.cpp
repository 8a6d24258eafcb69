#include <gtest/gtest.h>

#include <set>

#include "thuemorse/group.hpp"
#include "thuemorse/random.hpp"

namespace thuemorse {
namespace {

constexpr unsigned kTrials = 100;

std::vector<TreeVertex> level(unsigned q, unsigned n) {
  std::vector<TreeVertex> out{{}};
  for (unsigned d = 0; d < n; ++d) {
    std::vector<TreeVertex> next;
    for (const auto& v : out)
      for (unsigned a = 0; a < q; ++a) {
        next.push_back(v);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

TEST(Permutation, ShiftAndComposition) {
  const Permutation p = Permutation::shift(3, -1);
  EXPECT_EQ(p.images(), (std::vector<unsigned>{2, 0, 1}));
  EXPECT_TRUE(p.then(p.inverse()).is_identity());
  EXPECT_EQ(p.then(Permutation::shift(3, 1)), Permutation::identity(3));
  EXPECT_THROW(Permutation({0, 0}), Error);
}

TEST(Group, GeneratorDecomposition) {
  const Alphabet a(3);
  const auto r = WreathRecursion::thue_morse(a);
  const WreathElement x0 = decompose(r, parse_word("x0", a));
  EXPECT_EQ(x0.perm, Permutation::shift(3, -1));
  EXPECT_EQ(to_string(x0.sections[2]), "x2");
  const WreathElement x2 = decompose(r, parse_word("x2", a));
  for (const Word& s : x2.sections) EXPECT_TRUE(s.empty());
}

TEST(Group, ThetaDecomposesDiagonally) {
  Rng rng(10);
  for (unsigned q = 2; q <= 5; ++q) {
    const Alphabet a(q);
    const auto r = WreathRecursion::thue_morse(a);
    for (unsigned t = 0; t < kTrials; ++t) {
      const Word w = random_word(rng, a, 6);
      const WreathElement d = decompose(r, theta(w, a));
      EXPECT_TRUE(d.is_identity_perm());
      for (unsigned i = 0; i < q; ++i) EXPECT_EQ(d.sections[i], free_reduce(gamma(w, a, i))) << q;
    }
  }
}

TEST(Group, GeneratorsOfIndexAtLeastOneHaveOrderQ) {
  for (unsigned q = 2; q <= 5; ++q) {
    const Alphabet a(q);
    const auto r = WreathRecursion::thue_morse(a);
    for (unsigned i = 1; i < q; ++i) {
      EXPECT_EQ(order_of(r, Word::generator(i), 2 * q), q);
      EXPECT_TRUE(equal(r, Word::generator(i), Word::generator(1)).is_true());
    }
  }
}

TEST(Group, GeneratorXZeroIsNontrivial) {
  const Alphabet a(2);
  const auto r = WreathRecursion::thue_morse(a);
  EXPECT_TRUE(is_trivial(r, parse_word("x0", a)).is_false());
  EXPECT_TRUE(is_trivial(r, parse_word("x0^2", a)).is_false());
  EXPECT_EQ(to_string(Verdict::unknown(7)), "unknown(cap=7)");
}

TEST(Group, NucleusOfBinaryGroup) {
  const auto n = nucleus(WreathRecursion::thue_morse(Alphabet(2)));
  EXPECT_TRUE(n.closed);
  ASSERT_EQ(n.elements.size(), 4u);
  EXPECT_TRUE(n.elements.front().empty());
}

TEST(Group, BoundedProfileOfGenerator) {
  const Alphabet a(2);
  const auto p = boundedness_profile(WreathRecursion::thue_morse(a), parse_word("x0", a), 5);
  ASSERT_EQ(p.size(), 6u);
  for (std::size_t n = 1; n < p.size(); ++n) EXPECT_EQ(p[n], 2);
}

// ---------------------------------------------------------------- properties

class GroupProperty : public ::testing::TestWithParam<std::pair<unsigned, char>> {
 protected:
  Alphabet alphabet() const { return Alphabet(GetParam().first); }
  WreathRecursion recursion() const {
    return GetParam().second == 'G' ? WreathRecursion::thue_morse(alphabet())
                                    : WreathRecursion::thue_morse_variant(alphabet());
  }
};

TEST_P(GroupProperty, DecomposeIsMultiplicative) {
  Rng rng(11 + GetParam().first);
  const auto r = recursion();
  for (unsigned t = 0; t < kTrials; ++t) {
    const Word g = random_word(rng, alphabet(), 6);
    const Word h = random_word(rng, alphabet(), 6);
    EXPECT_EQ(decompose(r, g * h), decompose(r, g) * decompose(r, h));
  }
}

TEST_P(GroupProperty, RightActionLaw) {
  Rng rng(12 + GetParam().first);
  const auto r = recursion();
  const auto vertices = level(GetParam().first, 3);
  for (unsigned t = 0; t < kTrials / 4; ++t) {
    const Word g = random_word(rng, alphabet(), 5);
    const Word h = random_word(rng, alphabet(), 5);
    for (const auto& v : vertices) EXPECT_EQ(act(r, g * h, v), act(r, h, act(r, g, v)));
  }
}

TEST_P(GroupProperty, ActionIsALevelBijection) {
  Rng rng(13 + GetParam().first);
  const auto r = recursion();
  const auto vertices = level(GetParam().first, 3);
  for (unsigned t = 0; t < kTrials / 4; ++t) {
    const Word g = random_word(rng, alphabet(), 6);
    std::set<TreeVertex> images;
    for (const auto& v : vertices) images.insert(act(r, g, v));
    EXPECT_EQ(images.size(), vertices.size());
    for (const auto& v : vertices) EXPECT_EQ(act(r, g.inverse(), act(r, g, v)), v);
  }
}

TEST_P(GroupProperty, TrivialVerdictsAgreeWithMovedVertex) {
  Rng rng(14 + GetParam().first);
  const auto r = recursion();
  for (unsigned t = 0; t < kTrials; ++t) {
    const Word g = random_word(rng, alphabet(), 8);
    const Verdict v = is_trivial(r, g);
    const auto moved = moved_vertex(r, g, 6);
    if (v.is_true()) EXPECT_FALSE(moved) << to_string(g);
    if (moved) {
      EXPECT_FALSE(v.is_true()) << to_string(g);
      EXPECT_NE(act(r, g, *moved), *moved);
    }
  }
}

TEST_P(GroupProperty, WordTimesInverseIsTrivial) {
  Rng rng(15 + GetParam().first);
  const auto r = recursion();
  for (unsigned t = 0; t < kTrials; ++t) {
    const Word g = random_word(rng, alphabet(), 8);
    EXPECT_TRUE(is_trivial(r, g * g.inverse()).is_true());
  }
}

TEST_P(GroupProperty, SectionsComposeAlongPaths) {
  Rng rng(16 + GetParam().first);
  const auto r = recursion();
  const auto vertices = level(GetParam().first, 2);
  for (unsigned t = 0; t < kTrials / 4; ++t) {
    const Word g = random_word(rng, alphabet(), 6);
    for (const auto& v : vertices) {
      const TreeVertex head{v[0]};
      const TreeVertex tail{v[1]};
      const Word first = section(r, g, head);
      EXPECT_EQ(section(r, g, v), section(r, first, tail));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, GroupProperty,
                         ::testing::Values(std::pair{2u, 'G'}, std::pair{3u, 'G'}, std::pair{4u, 'G'},
                                           std::pair{2u, 'H'}, std::pair{3u, 'H'}),
                         [](const auto& info) {
                           return std::string(1, info.param.second) + std::to_string(info.param.first);
                         });

}  // namespace
}  // namespace thuemorse
