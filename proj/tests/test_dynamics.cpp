#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "thuemorse/dynamics.hpp"
#include "thuemorse/error.hpp"

namespace thuemorse {
namespace {

TEST(RationalMap, PresetsEvaluate) {
  const RationalMap f = RationalMap::preset(2);
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_NEAR(std::abs(f(Complex(1.0, 0.0)) - Complex(2.0, 0.0)), 0.0, 1e-15);
  for (unsigned q = 3; q <= 5; ++q) EXPECT_EQ(RationalMap::preset(q).degree(), q);
  EXPECT_THROW(RationalMap::preset(6), Error);
  EXPECT_THROW(RationalMap({1.0}, {0.0}), Error);
}

TEST(RationalMap, PreimagesSolveTheEquation) {
  for (unsigned q = 2; q <= 5; ++q) {
    const RationalMap f = RationalMap::preset(q);
    for (Complex z : {Complex(0.3, -0.2), Complex(-1.5, 0.7), Complex(2.0, 2.0)}) {
      const auto pre = f.preimages(z);
      EXPECT_EQ(pre.size(), q);
      for (Complex w : pre) EXPECT_LT(std::abs(f(w) - z), 1e-9);
    }
  }
}

TEST(Viewport, Parse) {
  const Viewport v = parse_viewport("0.5,-1,3");
  EXPECT_EQ(v.center, Complex(0.5, -1.0));
  EXPECT_EQ(v.width, 3.0);
  EXPECT_THROW(parse_viewport("1,2"), ParseError);
  EXPECT_THROW(parse_viewport("1,2,0"), ParseError);
}

TEST(Julia, SquareMapGivesTheUnitCircle) {
  RenderConfig cfg;
  cfg.points = 5000;
  const JuliaCloud c = julia_points(RationalMap::z_squared(), cfg);
  ASSERT_EQ(c.points.size(), 5000u);
  for (Complex z : c.points) EXPECT_NEAR(std::abs(z), 1.0, 1e-6);
}

TEST(Julia, DeterministicAcrossThreadCounts) {
  RenderConfig cfg;
  cfg.points = 4000;
  cfg.threads = 1;
  const JuliaCloud a = julia_points(RationalMap::preset(2), cfg);
  cfg.threads = 4;
  const JuliaCloud b = julia_points(RationalMap::preset(2), cfg);
  EXPECT_EQ(a.points, b.points);
  cfg.seed = 2;
  EXPECT_NE(julia_points(RationalMap::preset(2), cfg).points, a.points);
}

TEST(Julia, RenderAndWritePgm) {
  RenderConfig cfg;
  cfg.width = 64;
  cfg.height = 32;
  const GrayImage img = render({Complex(0, 0), Complex(0, 0), Complex(100, 0)}, cfg);
  unsigned x, y;
  ASSERT_TRUE(pixel_of(Complex(0, 0), cfg, x, y));
  EXPECT_EQ(x, 32u);
  EXPECT_EQ(y, 16u);
  EXPECT_EQ(img.at(x, y), 120);
  EXPECT_EQ(img.dark_pixels(), 1u);
  std::ostringstream out;
  write_pgm(img, out);
  EXPECT_EQ(out.str().rfind("P5\n64 32\n255\n", 0), 0u);
  EXPECT_EQ(out.str().size(), std::string("P5\n64 32\n255\n").size() + 64 * 32);
}

}  // namespace
}  // namespace thuemorse
