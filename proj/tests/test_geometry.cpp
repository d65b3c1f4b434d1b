#include <gtest/gtest.h>

#include "helly/errors.hpp"
#include "helly/geometry.hpp"
#include "support.hpp"

using namespace helly;

TEST(Inequality, EvaluateExamples) {
  LinearInequality x1({Rational(1)}, Rational(1));
  EXPECT_EQ(evaluate(x1, RatVector{Rational(0)}), Side::StrictlySatisfied);
  EXPECT_EQ(evaluate(x1, RatVector{Rational(1)}), Side::Tight);
  LinearInequality r({Rational(1), Rational(1, 2)}, Rational(1));
  EXPECT_EQ(evaluate(r, RatVector{Rational(1), Rational(1)}), Side::Violated);
  EXPECT_EQ(r.evaluate(IntPoint{0, 2}), Side::Tight);
}

TEST(Inequality, RejectsZeroNormalAndDimensionMismatch) {
  EXPECT_THROW(LinearInequality({Rational(0), Rational(0)}, Rational(1)), InvalidInput);
  LinearInequality r({Rational(1), Rational(1)}, Rational(1));
  EXPECT_THROW(r.evaluate(RatVector{Rational(1)}), InvalidInput);
  EXPECT_THROW(Polyhedron(3, {r}), InvalidInput);
  EXPECT_THROW(Polyhedron(0), InvalidInput);
}

TEST(Inequality, IntegerScaling) {
  LinearInequality r({Rational(1, 2), Rational(-1, 3)}, Rational(5, 4));
  auto s = r.integer_scaled();
  EXPECT_EQ(s.normal(), (RatVector{Rational(6), Rational(-4)}));
  EXPECT_EQ(s.rhs(), Rational(15));
}

TEST(Polyhedron, SubsystemsKeepOrder) {
  auto P = oracle::box(2, Rational(0), Rational(3));
  std::vector<std::size_t> idx{3, 0};
  auto S = P.subsystem(idx);
  ASSERT_EQ(S.size(), 2u);
  EXPECT_EQ(S[0], P[3]);
  EXPECT_EQ(S[1], P[0]);
  EXPECT_EQ(P.without(1).size(), 3u);
  std::vector<std::size_t> bad{7};
  EXPECT_THROW(P.subsystem(bad), InvalidInput);
}

TEST(Polyhedron, IntegerInteriorMatchesStrictContainment) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    auto P = oracle::random_bounded(rng, 2, 3, 3);
    auto Q = P.integer_interior();
    for_each_point(IntegerBox({-4, -4}, {4, 4}), [&](const IntPoint &p) {
      EXPECT_EQ(P.strictly_contains(p), Q.contains(p));
    });
  }
}

TEST(Polyhedron, IntegerRoundingKeepsIntegerPoints) {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    auto P = oracle::random_bounded(rng, 2, 4, 3);
    auto Q = P.integer_rounded();
    for_each_point(IntegerBox({-4, -4}, {4, 4}), [&](const IntPoint &p) {
      EXPECT_EQ(P.contains(p), Q.contains(p));
    });
    for (const auto &row : Q.rows()) {
      Integer g = 0;
      for (const auto &v : row.normal()) {
        EXPECT_EQ(v.get_den(), 1);
        g = gcd(g, v.get_num());
      }
      EXPECT_EQ(g, 1);
      EXPECT_EQ(row.rhs().get_den(), 1);
    }
  }
}

TEST(IntegerBox, ValidationAndIteration) {
  EXPECT_THROW(IntegerBox({0, 2}, {1, 1}), InvalidInput);
  IntegerBox b({0, -1}, {1, 1});
  EXPECT_EQ(b.volume(100), 6u);
  EXPECT_EQ(b.volume(4), 4u);
  std::vector<IntPoint> seen;
  for_each_point(b, [&](const IntPoint &p) { seen.push_back(p); });
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front(), (IntPoint{0, -1}));
  EXPECT_TRUE(b.contains({1, 0}));
  EXPECT_FALSE(b.contains({2, 0}));
}
