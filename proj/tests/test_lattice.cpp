#include <gtest/gtest.h>

#include "helly/errors.hpp"
#include "helly/lattice.hpp"
#include "helly/witness.hpp"
#include "support.hpp"

using namespace helly;

namespace {

LatticePointSet exact(const EnumOutcome &o) {
  EXPECT_TRUE(std::holds_alternative<EnumExact>(o));
  return std::get<EnumExact>(o).points;
}

} // namespace

TEST(Enumerate, UnitSquare) {
  auto P = oracle::box(2, Rational(0), Rational(1));
  EnumOptions o;
  o.cap = 100;
  auto pts = exact(enumerate(P, o));
  EXPECT_EQ(pts.points(), (std::vector<IntPoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  auto c = count(P);
  ASSERT_TRUE(std::holds_alternative<CountExact>(c));
  EXPECT_EQ(std::get<CountExact>(c).k, 4u);
}

TEST(Enumerate, StripIsInconclusive) {
  auto strip = oracle::make(2, {{{"1", "0"}, "3/4"}, {{"-1", "0"}, "-1/4"}});
  EnumOptions o;
  o.cap = 100;
  EXPECT_TRUE(std::holds_alternative<EnumUnboundedInconclusive>(enumerate(strip, o)));
  EXPECT_TRUE(std::holds_alternative<CountInconclusive>(count(strip, o)));
}

TEST(Enumerate, WitnessPolytopeW2) {
  auto W = build_witness(2);
  EnumOptions o;
  o.cap = 100;
  auto pts = exact(enumerate(W.poly, o));
  LatticePointSet expected({{0, 0}, {1, 0}, {1, -1}, {0, 1}, {-1, 0}, {-1, 1}, {0, -1}});
  EXPECT_EQ(pts, expected);
  // Independent check: sweep of {-2..2}^2.
  EXPECT_EQ(pts.points(), oracle::sweep(W.poly, {-2, -2}, {2, 2}));
  EXPECT_EQ(exact(interior_integer_points(W.poly, o)).points(), (std::vector<IntPoint>{{0, 0}}));
}

TEST(Enumerate, WitnessPolytopeW3Count) {
  auto W = build_witness(3);
  auto c = count(W.poly);
  ASSERT_TRUE(std::holds_alternative<CountExact>(c));
  EXPECT_EQ(std::get<CountExact>(c).k, 15u);
  EXPECT_EQ(oracle::sweep(W.poly, {-2, -2, -2}, {2, 2, 2}).size(), 15u);
}

TEST(Enumerate, SquareOfSide3) {
  auto c = count(oracle::box(2, Rational(0), Rational(3)));
  ASSERT_TRUE(std::holds_alternative<CountExact>(c));
  EXPECT_EQ(std::get<CountExact>(c).k, 16u);
}

TEST(Enumerate, HalfLineWitness) {
  auto P = oracle::make(1, {{{"-1"}, "0"}});
  EnumOptions o;
  o.cap = 10;
  auto r = enumerate(P, o);
  ASSERT_TRUE(std::holds_alternative<EnumUnboundedWithWitness>(r));
  const auto &w = std::get<EnumUnboundedWithWitness>(r);
  EXPECT_EQ(w.ray, (IntPoint{1}));
  EXPECT_TRUE(P.contains(w.point));
  EXPECT_TRUE(std::holds_alternative<CountInfiniteWitnessed>(count(P, o)));
}

TEST(Enumerate, InteriorExamples) {
  EXPECT_EQ(exact(interior_integer_points(oracle::box(2, Rational(0), Rational(2)))).points(),
            (std::vector<IntPoint>{{1, 1}}));
  EXPECT_TRUE(exact(interior_integer_points(oracle::box(2, Rational(0), Rational(1)))).empty());
}

TEST(Enumerate, CapAndErrors) {
  EnumOptions o;
  o.cap = 3;
  auto r = enumerate(oracle::box(2, Rational(0), Rational(1)), o);
  ASSERT_TRUE(std::holds_alternative<EnumCapExceeded>(r));
  EXPECT_EQ(std::get<EnumCapExceeded>(r).cap, 3u);
  auto c = count(oracle::box(2, Rational(0), Rational(1)), o);
  EXPECT_TRUE(std::holds_alternative<CountMoreThan>(c));
  o.cap = 0;
  EXPECT_THROW(enumerate(oracle::box(1, Rational(0), Rational(1)), o), InvalidInput);
  auto empty = oracle::make(1, {{{"1"}, "0"}, {{"-1"}, "-1"}});
  EXPECT_TRUE(exact(enumerate(empty)).empty());
}

TEST(Enumerate, BruteForceProperty) {
  Rng rng(123);
  for (int t = 0; t < 150; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto P = oracle::random_bounded(rng, n, static_cast<std::size_t>(rng.uniform(0, 4)), 3);
    IntPoint lo(n, -3), hi(n, 3);
    auto expected = oracle::sweep(P, lo, hi);
    auto got = exact(enumerate(P));
    EXPECT_EQ(got.points(), expected);
    for (const auto &p : got)
      EXPECT_TRUE(P.contains(p));
    auto interior = exact(interior_integer_points(P));
    EXPECT_EQ(interior.points(), oracle::sweep(P, lo, hi, true));
    // Interior is a subset, strictly smaller when some point is tight.
    bool tight = false;
    for (const auto &p : got) {
      if (!P.strictly_contains(p))
        tight = true;
    }
    EXPECT_LE(interior.size(), got.size());
    if (tight)
      EXPECT_LT(interior.size(), got.size());
  }
}

TEST(Enumerate, UnboundedWitnessSpotCheck) {
  Rng rng(5);
  int witnessed = 0;
  for (int t = 0; t < 80; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto P = oracle::random_bounded(rng, n, 2, 3);
    P = P.without(0);
    auto r = enumerate(P);
    if (auto *w = std::get_if<EnumUnboundedWithWitness>(&r)) {
      ++witnessed;
      bool nonzero = false;
      for (auto v : w->ray)
        nonzero = nonzero || v != 0;
      EXPECT_TRUE(nonzero);
      for (std::int64_t s = 0; s <= 3; ++s) {
        IntPoint q = w->point;
        for (std::size_t i = 0; i < n; ++i)
          q[i] += s * w->ray[i];
        EXPECT_TRUE(P.contains(q));
      }
    }
  }
  EXPECT_GT(witnessed, 10);
}

TEST(Enumerate, PrimitiveDirection) {
  EXPECT_EQ(primitive_integer_direction({Rational(2, 3), Rational(-4, 3)}), (IntPoint{1, -2}));
  EXPECT_EQ(primitive_integer_direction({Rational(0), Rational(5)}), (IntPoint{0, 1}));
}

TEST(Enumerate, FindIntegerPointInBox) {
  auto P = oracle::make(2, {{{"1", "1"}, "7/2"}, {{"-1", "-1"}, "-3"}});
  auto p = find_integer_point(P, IntegerBox({0, 0}, {5, 5}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (IntPoint{0, 3}));
  EXPECT_FALSE(find_integer_point(P, IntegerBox({4, 4}, {5, 5})).has_value());
}
