#include <gtest/gtest.h>

#include "thuemorse/algebra.hpp"
#include "thuemorse/random.hpp"

namespace thuemorse {
namespace {

constexpr unsigned kTrials = 60;

Algebra algebra(unsigned q, Mode mode = Mode::B) { return Algebra(Alphabet(q), Ring::rationals(), mode); }

TEST(Algebra, ParseAndRender) {
  const Algebra A = algebra(2);
  EXPECT_EQ(to_string(A.parse("2*x0 x1 - 1")), "-1 + 2*x0 x1");
  EXPECT_EQ(A.parse("(x0 - 1)(x0 + 1)"), A.parse("x0^2 - 1"));
  EXPECT_EQ(A.parse("x0 x0^-1"), A.one());
  EXPECT_EQ(to_string(A.zero()), "0");
  EXPECT_EQ(A.parse("1/2 x0 + 1/2 x0"), A.parse("x0"));
  EXPECT_THROW(A.parse("x0 +"), ParseError);
}

TEST(Algebra, ModeARejectsInverses) {
  const Algebra A = algebra(2, Mode::A);
  EXPECT_THROW(A.parse("x0^-1"), Error);
  EXPECT_THROW(star(A.parse("x0")), UnsupportedMode);
}

TEST(Algebra, CoefficientRings) {
  const Algebra Z(Alphabet(2), Ring::integers());
  EXPECT_THROW(Z.parse("1/2 x0"), Error);
  const Algebra F3(Alphabet(2), Ring::prime_field(3));
  EXPECT_TRUE(F3.parse("3 x0").is_zero());
  EXPECT_EQ(F3.parse("2 x0 + 2 x0"), F3.parse("x0"));
  EXPECT_THROW(Ring::parse("Fp:9"), Error);
}

TEST(Algebra, PhiOfGenerators) {
  const Algebra A = algebra(3);
  const Matrix x1 = phi(A.generator(1));
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) EXPECT_EQ(x1(i, j), (i == (j + 1) % 3) ? A.one() : A.zero());
  EXPECT_EQ(phi(A.one()), Matrix::identity(A, 3));
  EXPECT_TRUE(phi(A.parse("x1 - x2")).is_zero());

  const Matrix m = phi(A.parse("1 - x0"));
  for (unsigned j = 0; j < 3; ++j) {
    EXPECT_EQ(m(j, j), A.one());
    EXPECT_EQ(m((j + 1) % 3, j), -A.generator((j + 1) % 3));
  }
}

TEST(Algebra, ThetaImageIsDiagonalWithShiftedEntries) {
  Rng rng(20);
  for (unsigned q = 2; q <= 4; ++q) {
    const Algebra A = algebra(q);
    for (unsigned t = 0; t < kTrials; ++t) {
      const Element s = random_element(rng, A, 3, 4);
      const Matrix m = phi(theta(s));
      EXPECT_TRUE(m.is_diagonal());
      for (unsigned i = 0; i < q; ++i) EXPECT_EQ(m(i, i), gamma(s, i));
    }
  }
}

TEST(Algebra, SigmaMatrixIdentity) {
  Rng rng(21);
  for (unsigned q = 2; q <= 4; ++q) {
    const Algebra A = algebra(q);
    for (unsigned t = 0; t < kTrials; ++t) {
      std::vector<Element> parts;
      for (unsigned i = 0; i < q; ++i) parts.push_back(random_element(rng, A, 3, 1));
      const Matrix m = phi(sigma(parts));
      for (unsigned i = 0; i < q; ++i)
        for (unsigned j = 0; j < q; ++j) EXPECT_EQ(m(i, j), gamma(parts[(i + q - j) % q], j));
    }
  }
}

TEST(Algebra, SigmaOfOmegaOneIsNotDiagonal) {
  const Algebra A = algebra(2);
  const std::vector<Element> parts{A.zero(), A.parse("1 - x0 x1")};
  const Matrix m = phi(sigma(parts));
  EXPECT_FALSE(m.is_diagonal());
  EXPECT_EQ(m(1, 0), A.parse("1 - x0 x1"));
}

// Oracle for contraction_depth on 1 - g with g a group word: phi^n(g) is the
// monomial matrix of the sections g_v, so the depth is the least n at which
// every level-n section has reduced length at most 1.
unsigned section_depth(const WreathRecursion& r, const Word& g) {
  const unsigned q = r.degree();
  std::vector<TreeVertex> vertices{{}};
  for (unsigned n = 0;; ++n) {
    bool short_enough = true;
    for (const auto& v : vertices) short_enough &= section(r, g, v).size() <= 1;
    if (short_enough) return n;
    std::vector<TreeVertex> next;
    for (const auto& v : vertices)
      for (unsigned a = 0; a < q; ++a) {
        next.push_back(v);
        next.back().push_back(a);
      }
    vertices = std::move(next);
  }
}

TEST(Algebra, ContractionDepthOfOneMinusPower) {
  for (unsigned q = 2; q <= 4; ++q) {
    const Algebra A = algebra(q);
    const Word g = Word::generator(0).pow(q);
    const unsigned oracle = section_depth(A.recursion(), g);
    EXPECT_EQ(oracle, 2u) << q;
    EXPECT_EQ(contraction_depth(A.one() - A.monomial(g)), oracle) << q;
  }
  EXPECT_EQ(contraction_depth(algebra(2).parse("1 - x0")), 0u);
}

TEST(Algebra, ContractionDepthMatchesSectionOracle) {
  Rng rng(22);
  const Algebra A = algebra(3);
  for (unsigned t = 0; t < kTrials; ++t) {
    const Word g = free_reduce(random_word(rng, A.alphabet(), 8));
    if (g.size() <= 1) continue;
    EXPECT_EQ(contraction_depth(A.one() - A.monomial(g)), section_depth(A.recursion(), g)) << to_string(g);
  }
}

TEST(Algebra, ZeroProblemExamples) {
  for (unsigned q = 2; q <= 4; ++q) {
    const Algebra A = algebra(q);
    const ZeroVerdict v = is_zero(A.generator(1).pow(q) - A.one());
    EXPECT_TRUE(v.is_zero());
    EXPECT_EQ(v.depth, 1u);
    EXPECT_TRUE(is_zero(A.parse("x0 - 1")).is_nonzero());
    EXPECT_TRUE(is_zero(A.zero()).is_zero());
  }
  const Algebra B = algebra(3);
  EXPECT_TRUE(is_zero(B.parse("((x0 x1^-1)^3 - 1)((x1^-1 x0)^3 - 1)")).is_zero());
}

TEST(Algebra, NonzeroCertificateIsAScalarEntry) {
  const Algebra A = algebra(2);
  const ZeroVerdict v = is_zero(A.parse("x0 x1 - x1 x0"));
  ASSERT_TRUE(v.is_nonzero());
  const SparseMatrix m = expand(A.parse("x0 x1 - x1 x0"), v.depth);
  std::uint64_t row = 0, col = 0;
  for (unsigned a : v.row) row = row * 2 + a;
  for (unsigned a : v.col) col = col * 2 + a;
  const auto it = m.entries.find({row, col});
  ASSERT_NE(it, m.entries.end());
  EXPECT_EQ(it->second, A.scalar(v.scalar));
}

TEST(Algebra, ExpandAgreesWithPhi) {
  const Algebra A = algebra(3);
  const Element s = A.parse("1 - x0 x1 + 2 x2");
  const Matrix m = phi(s);
  const SparseMatrix e = expand(s, 1);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      const auto it = e.entries.find({i, j});
      EXPECT_EQ(it == e.entries.end() ? A.zero() : it->second, m(i, j));
    }
}

TEST(Algebra, RowColumnBounds) {
  const auto p = row_col_bound_profile(algebra(2).parse("1 - x0"), 3);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0], (RowColBound{1, 1}));
  for (std::size_t n = 1; n < p.size(); ++n) EXPECT_EQ(p[n], (RowColBound{2, 2}));
}

TEST(Algebra, OmegaZero) {
  const auto omega = omega_enumerate(algebra(2), 0, 1, 100);
  ASSERT_EQ(omega.size(), 5u);
  EXPECT_TRUE(omega.front().is_zero());
  EXPECT_EQ(omega_enumerate(algebra(2), 1, 1, 10).size(), 10u);
}

// ---------------------------------------------------------------- properties

TEST(AlgebraProperties, ToStringRoundTrips) {
  Rng rng(23);
  for (unsigned q = 2; q <= 4; ++q) {
    const Algebra A = algebra(q);
    for (unsigned t = 0; t < kTrials; ++t) {
      const Element s = random_element(rng, A, 4, 5);
      EXPECT_EQ(A.parse(to_string(s)), s) << to_string(s);
    }
  }
}

TEST(AlgebraProperties, PhiIsARingHomomorphism) {
  Rng rng(24);
  for (unsigned q = 2; q <= 3; ++q) {
    const Algebra A = algebra(q);
    for (unsigned t = 0; t < kTrials; ++t) {
      const Element s = random_element(rng, A, 3, 4);
      const Element u = random_element(rng, A, 3, 4);
      EXPECT_EQ(phi(s * u), phi(s) * phi(u));
      EXPECT_EQ(phi(s + u), phi(s) + phi(u));
    }
  }
}

TEST(AlgebraProperties, PhiIsMultiplicativeInModeA) {
  Rng rng(25);
  const Algebra A = algebra(3, Mode::A);
  for (unsigned t = 0; t < kTrials; ++t) {
    const Element s = random_element(rng, A, 3, 4);
    const Element u = random_element(rng, A, 3, 4);
    EXPECT_EQ(phi(s * u), phi(s) * phi(u));
  }
}

TEST(AlgebraProperties, StarIsAnInvolutionCompatibleWithPhi) {
  Rng rng(26);
  for (unsigned q = 2; q <= 3; ++q) {
    const Algebra A = algebra(q);
    for (unsigned t = 0; t < kTrials; ++t) {
      const Element s = random_element(rng, A, 3, 4);
      const Element u = random_element(rng, A, 3, 4);
      EXPECT_EQ(star(star(s)), s);
      EXPECT_EQ(star(s * u), star(u) * star(s));
      const Matrix m = phi(s);
      const Matrix ms = phi(star(s));
      for (unsigned i = 0; i < q; ++i)
        for (unsigned j = 0; j < q; ++j) EXPECT_EQ(ms(i, j), star(m(j, i)));
    }
  }
}

TEST(AlgebraProperties, ZeroIsACongruence) {
  Rng rng(27);
  const Algebra A = algebra(2);
  const std::vector<Element> zeros{A.parse("x1^2 - 1"), A.parse("(x0 x1^-1)^2 (x1^-1 x0)^2 - (x0 x1^-1)^2 - (x1^-1 x0)^2 + 1")};
  for (const Element& z : zeros) ASSERT_TRUE(is_zero(z).is_zero()) << to_string(z);
  for (unsigned t = 0; t < kTrials; ++t) {
    const Element u = random_element(rng, A, 2, 3);
    const Element v = random_element(rng, A, 2, 3);
    const Element s = u * zeros[t % 2] * v;
    const Element r = zeros[(t + 1) % 2] * u;
    EXPECT_TRUE(is_zero(s).is_zero()) << to_string(s);
    EXPECT_TRUE(is_zero(s + r).is_zero());
  }
}

TEST(AlgebraProperties, ZeroVerdictIsNeverUnsoundOnScalars) {
  Rng rng(28);
  const Algebra A = algebra(2);
  for (unsigned t = 0; t < kTrials; ++t) {
    const Element s = random_element(rng, A, 3, 3);
    const ZeroVerdict v = is_zero(s);
    if (v.is_nonzero()) EXPECT_NE(v.scalar, 0);
    if (s.is_nonzero_scalar()) EXPECT_TRUE(v.is_nonzero());
  }
}

}  // namespace
}  // namespace thuemorse
