#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hyperball/schlafli.hpp"

using namespace hyperball;

namespace {

double c(int n) { return std::cos(std::numbers::pi / n); }
double s(int n) { return std::sin(std::numbers::pi / n); }

template <class F>
void for_grid(F&& f) {
  for (int u = 3; u <= 20; ++u)
    for (int v = 3; v <= 20; ++v)
      for (int w = 3; w <= 20; ++w) f(u, v, w);
}

}  // namespace

TEST(SchlafliParam, RejectsOrdersBelowTwo) {
  EXPECT_THROW(SchlafliParam(1), Error);
  try {
    SchlafliParam(0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSymbol);
  }
}

TEST(SchlafliParam, InfinitySortsLast) {
  EXPECT_LT(SchlafliParam(1000), SchlafliParam::infinite());
  EXPECT_EQ(SchlafliParam::infinite().str(), "inf");
  EXPECT_EQ(SchlafliParam::infinite().cos_angle(), 1.0);
}

TEST(ParseSchlafli, AcceptsInfinitySpellings) {
  EXPECT_EQ(parse_schlafli("3,3,inf"), SchlafliSymbol(SchlafliParam(3), SchlafliParam(3), SchlafliParam::infinite()));
  EXPECT_EQ(parse_schlafli(" 7 , 3 , 7 "), SchlafliSymbol(7, 3, 7));
  EXPECT_EQ(parse_schlafli("oo,3,3").u, SchlafliParam::infinite());
}

TEST(ParseSchlafli, RejectsMalformed) {
  for (const char* bad : {"", "3,3", "3,3,3,3", "3,x,7", "3,1,7", "3,,7", "3.5,3,7"}) {
    EXPECT_THROW(parse_schlafli(bad), Error) << bad;
  }
}

TEST(Gram, EntriesOf337) {
  const GramMatrix g = build_gram({3, 3, 7});
  EXPECT_DOUBLE_EQ(g.entries(0, 1), -0.5);
  EXPECT_DOUBLE_EQ(g.entries(1, 2), -0.5);
  EXPECT_NEAR(g.entries(2, 3), -0.9009688679024191, 1e-15);
  EXPECT_EQ(g.entries(0, 2), 0.0);
  EXPECT_EQ(g.entries(0, 3), 0.0);
  EXPECT_EQ(g.entries, g.entries.transpose());
}

TEST(Gram, RightAnglesGiveIdentity) {
  const GramMatrix g = build_gram({2, 2, 2});
  EXPECT_EQ(g.entries, Matrix4::Identity());
  EXPECT_DOUBLE_EQ(gram_determinant(g), 1.0);
  EXPECT_EQ(cometric({2, 2, 2}).entries, Matrix4::Identity());
}

TEST(Gram, InfiniteEntryIsMinusOne) {
  const GramMatrix g = build_gram({SchlafliParam(3), SchlafliParam(3), SchlafliParam::infinite()});
  EXPECT_EQ(g.entries(2, 3), -1.0);
}

TEST(Gram, DeterminantMatchesClosedFormOnGrid) {
  for_grid([](int u, int v, int w) {
    const SchlafliSymbol sym(u, v, w);
    ASSERT_NEAR(gram_determinant(build_gram(sym)), gram_determinant_closed_form(sym), 1e-12) << sym;
  });
  // the (3,3,u) specialization 3/4 sin^2(pi/u) - 1/4
  EXPECT_NEAR(gram_determinant_closed_form({3, 3, 7}), 0.75 * s(7) * s(7) - 0.25, 1e-15);
  EXPECT_NEAR(gram_determinant_closed_form({3, 3, 7}), -0.10881, 5e-6);
  EXPECT_LT(gram_determinant_closed_form({7, 3, 7}), 0.0);
}

TEST(CoMetric, InverseTimesGramIsIdentity) {
  for_grid([](int u, int v, int w) {
    const SchlafliSymbol sym(u, v, w);
    const GramMatrix g = build_gram(sym);
    if (std::abs(g.determinant) <= 1e-10) return;
    const Matrix4 p = invert_gram(g, sym).entries * g.entries;
    ASSERT_LT((p - Matrix4::Identity()).cwiseAbs().maxCoeff(), 1e-12) << sym;
  });
}

TEST(CoMetric, MatchesClosedFormEntries) {
  for_grid([](int u, int v, int w) {
    const SchlafliSymbol sym(u, v, w);
    const double b = gram_determinant_closed_form(sym);
    if (!(b < -kDeterminantTol)) return;
    const CoMetric a = cometric(sym);
    const double tol = 1e-10 * std::max(1.0, a.entries.cwiseAbs().maxCoeff());
    ASSERT_NEAR(a(0, 0), (s(w) * s(w) - c(v) * c(v)) / b, tol) << sym;
    ASSERT_NEAR(a(3, 3), (s(u) * s(u) - c(v) * c(v)) / b, tol) << sym;
    ASSERT_NEAR(a(0, 3), c(u) * c(v) * c(w) / b, tol) << sym;
    ASSERT_NEAR(a(1, 2), c(v) / b, tol) << sym;
    ASSERT_NEAR(a(2, 2), s(u) * s(u) / b, tol) << sym;
    ASSERT_NEAR(a(1, 1), s(w) * s(w) / b, tol) << sym;
  });
}

TEST(CoMetric, SingularGramThrows) {
  // {4,3,4}: sin^2(pi/4) sin^2(pi/4) = 1/4 = cos^2(pi/3)
  try {
    cometric({4, 3, 4});
    FAIL() << "expected SingularMatrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(Vertices, ClassesOfKnownExamples) {
  using V = VertexClass;
  EXPECT_EQ(classify_vertices(cometric({3, 3, 7})), (VertexClasses{V::Outer, V::Proper, V::Proper, V::Proper}));
  EXPECT_EQ(classify_vertices(cometric({7, 3, 7})), (VertexClasses{V::Outer, V::Proper, V::Proper, V::Outer}));
  EXPECT_EQ(classify_vertices(cometric({3, 3, 6}))[0], V::Ideal);
  const CoMetric a = cometric({3, 3, 7});
  EXPECT_GT(a(0, 0), 0.0);
  EXPECT_LT(a(3, 3), 0.0);
}

TEST(Vertices, InfiniteSymbolHasIdealA1) {
  const auto cls = classify_vertices(cometric({SchlafliParam(3), SchlafliParam(3), SchlafliParam::infinite()}));
  EXPECT_EQ(cls[0], VertexClass::Outer);
  EXPECT_EQ(cls[1], VertexClass::Ideal);
}

TEST(Realizability, KnownExamples) {
  EXPECT_EQ(realizability({3, 3, 7}), Realizability::CompactTruncHyperbolic);
  EXPECT_EQ(realizability({3, 3, 6}), Realizability::DegenerateEuclidean);
  EXPECT_EQ(realizability({3, 3, 5}), Realizability::NotHyperbolic);
  EXPECT_EQ(realizability({4, 3, 4}), Realizability::DegenerateEuclidean);
  EXPECT_EQ(realizability({4, 3, 5}), Realizability::ProperHyperbolic);
}

TEST(Realizability, SignatureOfHyperbolicSymbols) {
  const Signature sg = signature(build_gram({3, 3, 7}));
  EXPECT_EQ(sg.positive, 3);
  EXPECT_EQ(sg.negative, 1);
}

TEST(Realizability, ReversalSymmetricOnGrid) {
  for_grid([](int u, int v, int w) {
    const SchlafliSymbol sym(u, v, w);
    ASSERT_EQ(realizability(sym), realizability(sym.reversed())) << sym;
    if (gram_determinant_closed_form(sym) < -kDeterminantTol) {
      const auto a = classify_vertices(cometric(sym));
      const auto b = classify_vertices(cometric(sym.reversed()));
      for (int i = 0; i < 4; ++i) ASSERT_EQ(a[i], b[3 - i]) << sym;
    }
  });
}
