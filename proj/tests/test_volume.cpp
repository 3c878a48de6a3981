#include <gtest/gtest.h>

#include "hyperball/volume.hpp"

using namespace hyperball;

namespace {

ErrorKind kind_of(const SchlafliSymbol& s) {
  try {
    orthoscheme_volume(s);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;  // sentinel: no throw
}

}  // namespace

// Frozen from mpmath (30 digits, Lobachevsky via Clausen) on the same closed form.
TEST(OrthoschemeVolume, FrozenValues) {
  EXPECT_NEAR(orthoscheme_volume({3, 3, 7}).volume, 0.088561568488173165, 1e-13);
  EXPECT_NEAR(orthoscheme_volume({7, 3, 7}).volume, 0.38324702553963326, 1e-13);
  EXPECT_NEAR(orthoscheme_volume({3, 3, 8}).volume, 0.10721, 5e-6);
  EXPECT_NEAR(orthoscheme_volume({SchlafliParam(3), SchlafliParam(3), SchlafliParam::infinite()}).volume,
              0.15266093236286984, 1e-13);
}

// Compact Coxeter orthoschemes whose volumes are classical.
TEST(OrthoschemeVolume, CompactCoxeterOrthoschemes) {
  EXPECT_NEAR(orthoscheme_volume({4, 3, 5}).volume, 0.035885063339423405, 1e-13);
  EXPECT_NEAR(orthoscheme_volume({3, 5, 3}).volume, 0.039050285615021771, 1e-13);
}

TEST(OrthoschemeVolume, ThetaInFirstQuadrant) {
  for (int u = 7; u <= 60; ++u) {
    const double t = theta({3, 3, u});
    EXPECT_GT(t, 0.0);
    EXPECT_LT(t, 0.5 * std::numbers::pi);
  }
}

TEST(OrthoschemeVolume, Errors) {
  EXPECT_EQ(kind_of({3, 3, 5}), ErrorKind::NotRealizable);
  EXPECT_EQ(kind_of({4, 3, 4}), ErrorKind::NotRealizable);
  EXPECT_EQ(kind_of({2, 5, 7}), ErrorKind::DivisionByZero);
}

TEST(OrthoschemeVolume, ReversalInvariant) {
  for (int u = 3; u <= 15; ++u)
    for (int v = 3; v <= 15; ++v)
      for (int w = 3; w <= 15; ++w) {
        const SchlafliSymbol s(u, v, w);
        if (!(gram_determinant_closed_form(s) < -kDeterminantTol)) continue;
        ASSERT_NEAR(orthoscheme_volume(s).volume, orthoscheme_volume(s.reversed()).volume, 1e-12) << s;
      }
}

TEST(OrthoschemeVolume, IncreasesTowardTheIdealLimit) {
  const double limit = orthoscheme_volume({SchlafliParam(3), SchlafliParam(3), SchlafliParam::infinite()}).volume;
  double prev = 0.0;
  for (int u = 7; u <= 200; ++u) {
    const double v = orthoscheme_volume({3, 3, u}).volume;
    ASSERT_GT(v, prev) << u;
    ASSERT_LT(v, limit) << u;
    prev = v;
  }
  EXPECT_NEAR(prev, limit, 1e-3);
}

TEST(OrthoschemeVolume, PositiveAcrossGrid) {
  for (int u = 3; u <= 20; ++u) {
    for (int v = 3; v <= 20; ++v) {
      for (int w = 3; w <= 20; ++w) {
        const SchlafliSymbol s(u, v, w);
        if (gram_determinant_closed_form(s) < -kDeterminantTol) {
          ASSERT_GT(orthoscheme_volume(s).volume, 0.0) << s;
        }
      }
    }
  }
}
