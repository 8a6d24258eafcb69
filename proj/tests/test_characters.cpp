#include <gtest/gtest.h>

#include "thuemorse/characters.hpp"
#include "thuemorse/linear_system.hpp"
#include "thuemorse/random.hpp"

namespace thuemorse {
namespace {

Algebra algebra(unsigned q) { return Algebra(Alphabet(q)); }

ExactQ frac(long n, unsigned q, unsigned k) { return ExactQ(BigInt(n), ipow(q, k)); }

TEST(ExactQ, ParseAndRender) {
  EXPECT_EQ(ExactQ::parse("3/2^2"), ExactQ(BigInt(3), BigInt(4)));
  EXPECT_EQ(ExactQ::parse("-6/4").render(2), "-3/2");
  EXPECT_EQ(ExactQ(BigInt(2), BigInt(9)).render(3), "2/3^2");
  EXPECT_EQ(ExactQ(BigInt(1), BigInt(6)).q_power(2), std::nullopt);
  EXPECT_EQ(ExactQ(5).render(3), "5");
}

TEST(ExactQ, QAdicMembershipForCompositeQ) {
  const ExactQ half(BigInt(1), BigInt(2));
  EXPECT_EQ(half.q_power(4), std::nullopt);
  EXPECT_EQ(half.q_adic_exponent(4), 1u);
  EXPECT_TRUE(ExactQ(BigInt(5), BigInt(2)).in_nonneg_q_adic(4));
  EXPECT_EQ(ExactQ(BigInt(1), BigInt(8)).q_adic_exponent(6), 3u);
  EXPECT_FALSE(ExactQ(BigInt(1), BigInt(3)).in_nonneg_q_adic(4));
  EXPECT_FALSE(ExactQ(BigInt(-1), BigInt(4)).in_nonneg_q_adic(4));
}

TEST(LinearSystem, SolvesCoupledEquations) {
  // x0 = x1/2 + 1, x1 = x0/2
  const std::vector<FixedPointEquation> sys{{{{1, mpq_class(1, 2)}}, 1}, {{{0, mpq_class(1, 2)}}, 0}};
  SolveStats stats;
  const auto x = solve_fixed_point(sys, &stats);
  EXPECT_EQ(x[0], mpq_class(4, 3));
  EXPECT_EQ(x[1], mpq_class(2, 3));
  EXPECT_EQ(stats.largest_component, 2u);
}

TEST(LinearSystem, SingularComponentThrows) {
  const std::vector<FixedPointEquation> sys{{{{0, 1}}, 1}};
  EXPECT_THROW(solve_fixed_point(sys), SingularSystem);
}

TEST(Kernel, ParseAndSemidefiniteness) {
  EXPECT_TRUE(Kernel::ones(3).is_positive_semidefinite());
  EXPECT_TRUE(Kernel::identity(3).is_positive_semidefinite());
  EXPECT_FALSE(Kernel::parse("1,2;2,1", 2).is_positive_semidefinite());
  EXPECT_EQ(Kernel::parse("identity", 2)(0, 1), ExactQ(0));
  EXPECT_THROW(Kernel::parse("1,0;0", 2), Error);
}

TEST(Spread, BasicValues) {
  const Algebra A = algebra(2);
  EXPECT_EQ(spread_value(A.parse("1 - x0")), ExactQ(2));
  EXPECT_EQ(spread_value(A.zero()), ExactQ(0));
  EXPECT_EQ(spread_value(A.parse("x0 x1")), ExactQ(1));
  EXPECT_EQ(spread_value(A.parse("x1^2 - 1")), ExactQ(0));
}

TEST(Spread, InfinitesimalValues) {
  for (unsigned q = 2; q <= 4; ++q) {
    const Algebra A = algebra(q);
    std::vector<unsigned> all(q);
    for (unsigned i = 0; i < q; ++i) all[i] = i;
    const Word block = Word::from_indices(all);
    for (unsigned k = 1; k <= 3; ++k) {
      const unsigned long n = ipow(q, k).get_ui();
      EXPECT_EQ(spread_value(A.one() - A.monomial(Word::generator(0).pow(static_cast<long long>(n)))),
                frac(2, q, k - 1))
          << q << ' ' << k;
      for (unsigned i = 0; i < q; ++i)
        EXPECT_EQ(spread_value(A.one() - A.monomial(gamma(block, A.alphabet(), i).pow(static_cast<long long>(n)))),
                  frac(2, q, k))
            << q << ' ' << k << ' ' << i;
    }
  }
}

TEST(Spread, CapIsReported) {
  CharOptions o;
  o.cap_classes = 1;
  const CharResult r = spread_char(algebra(2).parse("1 - x0^8"), o);
  EXPECT_FALSE(r.known());
  EXPECT_EQ(r.cap, 1u);
  EXPECT_THROW(spread_value(algebra(2).parse("1 - x0^8"), o), CapExceeded);
}

TEST(GroupChar, TrivialKernelGivesOne) {
  Rng rng(30);
  const auto r = WreathRecursion::thue_morse(Alphabet(3));
  for (unsigned t = 0; t < 30; ++t) {
    const CharResult c = group_char(r, random_word(rng, Alphabet(3), 6), Kernel::ones(3));
    ASSERT_TRUE(c.known());
    EXPECT_EQ(*c.value, ExactQ(1));
  }
}

// Oracle: the fixed-point character is the limit of the fraction of level-n
// vertices fixed by g. The fractions decrease in n, and equal the limit once
// every fixed section is trivial.
TEST(GroupChar, FixedPointCharacterMatchesVertexCounting) {
  constexpr unsigned kDepth = 10;
  Rng rng(31);
  const Alphabet a(2);
  const auto r = WreathRecursion::thue_morse(a);
  unsigned exact = 0;
  for (unsigned t = 0; t < 40; ++t) {
    const Word g = random_word(rng, a, 6);
    const CharResult c = group_char(r, g, Kernel::identity(2));
    ASSERT_TRUE(c.known());
    std::vector<TreeVertex> fixed{{}};
    for (unsigned n = 0; n < kDepth; ++n) {
      std::vector<TreeVertex> next;
      for (const auto& v : fixed)
        for (unsigned x = 0; x < 2; ++x) {
          TreeVertex w = v;
          w.push_back(x);
          if (act(r, g, w) == w) next.push_back(w);
        }
      fixed = std::move(next);
    }
    const ExactQ fraction(BigInt(static_cast<unsigned long>(fixed.size())), ipow(2, kDepth));
    EXPECT_LE(*c.value, fraction) << to_string(g);
    if (fraction == *c.value) ++exact;
  }
  EXPECT_GT(exact, 20u);
}

// ---------------------------------------------------------------- counting

TEST(Counting, CollapseAndMembership) {
  const Algebra A = algebra(3);
  EXPECT_EQ(collapse(A.parse("x2 x1 x2")), A.parse("1"));
  EXPECT_TRUE(in_L(A.parse("x2")));
  EXPECT_TRUE(in_L(A.parse("-x0")));
  EXPECT_FALSE(in_L(A.parse("x0 x1")));
  EXPECT_FALSE(in_L(A.zero()));
}

// Oracle: materialize phi^k(s) and test every entry.
BigInt brute_count(const Element& s, unsigned k) {
  BigInt n = 0;
  for (const auto& [pos, entry] : expand(s, k).entries) n += in_L(entry) ? 1 : 0;
  return n;
}

TEST(Counting, EngineMatchesMaterializedMatrix) {
  Rng rng(32);
  for (unsigned q = 2; q <= 3; ++q) {
    const Algebra A = algebra(q);
    for (unsigned t = 0; t < 15; ++t) {
      const Element s = random_element(rng, A, 3, 4);
      for (unsigned k = 0; k <= 3; ++k) EXPECT_EQ(count_L(s, k), brute_count(s, k)) << to_string(s) << " k=" << k;
    }
  }
}

TEST(Counting, GrowthConstantOfOneMinusXZero) {
  const GrowthReport g = growth_constant(algebra(2).parse("1 - x0"), 1, 10);
  EXPECT_EQ(g.chi, ExactQ(2));
  EXPECT_TRUE(g.stable);
  EXPECT_EQ(g.constant, ExactQ(0));
}

TEST(Counting, DeepLevelIsCheap) {
  const BigInt n = count_L(algebra(2).parse("1 - x0^4"), 20);
  EXPECT_GT(n, 0);
}

// ---------------------------------------------------------------- properties

TEST(CharProperties, ExtraLevelsDoNotChangeValues) {
  Rng rng(33);
  for (unsigned q = 2; q <= 3; ++q) {
    const Algebra A = algebra(q);
    for (unsigned t = 0; t < 30; ++t) {
      const Element s = random_element(rng, A, 3, 5);
      const ExactQ base = spread_value(s);
      for (unsigned extra : {1u, 2u}) {
        CharOptions o;
        o.extra_levels = extra;
        EXPECT_EQ(spread_value(s, o), base) << to_string(s);
      }
    }
  }
}

TEST(CharProperties, SpreadIsHomogeneousUnderUnits) {
  Rng rng(34);
  const Algebra A = algebra(2);
  for (unsigned t = 0; t < 40; ++t) {
    const Element s = random_element(rng, A, 3, 5);
    EXPECT_EQ(spread_value(Coeff(-3) * s), spread_value(s));
  }
}

TEST(CharProperties, SpreadValuesAreNonnegativeQAdic) {
  Rng rng(35);
  for (unsigned q = 2; q <= 4; ++q) {
    const Algebra A = algebra(q);
    for (unsigned t = 0; t < 30; ++t) {
      const ExactQ v = spread_value(random_element(rng, A, 3, 5));
      EXPECT_TRUE(v.in_nonneg_q_adic(q)) << v.to_string() << " q=" << q;
    }
  }
}

TEST(CharProperties, GammaInvarianceOnOmega) {
  for (unsigned q = 2; q <= 3; ++q) {
    const Algebra A = algebra(q);
    for (const Element& x : omega_enumerate(A, 1, 1, 40)) {
      const ExactQ v = spread_value(x);
      for (unsigned i = 1; i < q; ++i) EXPECT_EQ(spread_value(gamma(x, i)), v) << to_string(x);
    }
  }
}

TEST(CharProperties, AdditivityOnOmegaZeroTuples) {
  Rng rng(36);
  for (unsigned q = 2; q <= 3; ++q) {
    const Algebra A = algebra(q);
    const auto omega = omega_enumerate(A, 0, 2, 100);
    for (unsigned t = 0; t < 20; ++t) {
      std::vector<Element> parts;
      for (unsigned i = 0; i < q; ++i) parts.push_back(omega[rng() % omega.size()]);
      const AdditivityReport r = additivity_check(parts);
      EXPECT_TRUE(r.additive) << to_string(r.sigma);
      EXPECT_EQ(spread_value(r.sigma), r.lhs);
    }
  }
}

TEST(CharProperties, CountStabilizes) {
  Rng rng(37);
  const Algebra A = algebra(2);
  for (unsigned t = 0; t < 10; ++t) {
    const Word w = free_reduce(random_word(rng, A.alphabet(), 6));
    const GrowthReport g = growth_constant(A.one() - A.monomial(w), 6, 12);
    EXPECT_TRUE(g.stable) << to_string(w);
  }
}

// ---------------------------------------------------------------- witness

TEST(Witness, HitsTargetsExactly) {
  for (const char* target : {"0", "1", "2", "3/2^2", "5/2^3", "7/2"}) {
    const Algebra A = algebra(2);
    const WitnessResult w = theorem_witness(A, ExactQ::parse(target));
    ASSERT_TRUE(w.element) << target << ": " << w.note;
    EXPECT_EQ(spread_value(*w.element), ExactQ::parse(target));
  }
  EXPECT_THROW(theorem_witness(algebra(2), ExactQ::parse("1/3")), Error);
  EXPECT_THROW(theorem_witness(algebra(2), ExactQ::parse("-1")), Error);
  const WitnessResult w = theorem_witness(algebra(4), ExactQ::parse("1/2"));
  if (w.element) EXPECT_EQ(spread_value(*w.element), ExactQ::parse("1/2"));
}

}  // namespace
}  // namespace thuemorse
