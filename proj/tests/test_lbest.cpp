#include <gtest/gtest.h>

#include <algorithm>

#include "helly/bounds.hpp"
#include "helly/errors.hpp"
#include "helly/lbest.hpp"
#include "support.hpp"

using namespace helly;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (auto x : v)
    out.emplace_back(x);
  return out;
}

LinearInequality row(std::initializer_list<long> a, long b) {
  RatVector v;
  for (auto x : a)
    v.emplace_back(x);
  return LinearInequality(v, Rational(b));
}

// Composite objective value computed directly: sum_i (u^n c_i + u^(n-i)) x_i.
Integer cbar_value(const std::vector<Integer> &c, std::int64_t u, const IntPoint &x) {
  const std::size_t n = c.size();
  Integer U = u, total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer un = 1, low = 1;
    for (std::size_t e = 0; e < n; ++e)
      un *= U;
    for (std::size_t e = 0; e < n - 1 - i; ++e)
      low *= U;
    total += (un * c[i] + low) * Integer(static_cast<long>(x[i]));
  }
  return total;
}

std::vector<IntPoint> brute_l_best(const std::vector<LinearInequality> &rows,
                                   const std::vector<Integer> &c, std::int64_t u, std::size_t l) {
  const std::size_t n = c.size();
  std::vector<std::pair<Integer, IntPoint>> feasible;
  for_each_point(IntegerBox(IntPoint(n, 0), IntPoint(n, u)), [&](const IntPoint &p) {
    for (const auto &r : rows)
      if (r.lhs(p) > r.rhs())
        return;
    feasible.emplace_back(cbar_value(c, u, p), p);
  });
  std::sort(feasible.begin(), feasible.end());
  std::vector<IntPoint> out;
  for (std::size_t i = 0; i < feasible.size() && i < l; ++i)
    out.push_back(feasible[i].second);
  return out;
}

std::vector<std::size_t> iota(std::size_t m) {
  std::vector<std::size_t> v(m);
  for (std::size_t i = 0; i < m; ++i)
    v[i] = i;
  return v;
}

// Rows all satisfied by `anchor`, with slack in [0, 3].
std::vector<LinearInequality> rows_through(Rng &rng, const IntPoint &anchor, std::size_t m) {
  std::vector<LinearInequality> rows;
  while (rows.size() < m) {
    RatVector a(anchor.size());
    Integer dot = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto v = rng.uniform(-3, 3);
      nonzero = nonzero || v != 0;
      a[i] = to_rational(v);
      dot += Integer(static_cast<long>(v * anchor[i]));
    }
    if (!nonzero)
      continue;
    rows.emplace_back(a, Rational(dot + rng.uniform(0, 3)));
  }
  return rows;
}

std::vector<LinearInequality> pick(const std::vector<LinearInequality> &rows,
                                   const std::vector<std::size_t> &idx) {
  std::vector<LinearInequality> out;
  for (auto i : idx)
    out.push_back(rows[i]);
  return out;
}

} // namespace

TEST(TieBreak, Examples) {
  EXPECT_EQ(tie_break(ints({1, 1}), 2).cbar, ints({6, 5}));
  auto flat = tie_break(ints({0, 0}), 1);
  EXPECT_EQ(flat.cbar, ints({1, 1}));
  EXPECT_FALSE(flat.injective_on_box(1));
  EXPECT_EQ(tie_break(ints({5}), 3).cbar, ints({16}));
  EXPECT_THROW(tie_break(ints({1}), 0), InvalidInput);
}

TEST(TieBreak, ValueMatchesDirectFormula) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    std::int64_t u = rng.uniform(1, 6);
    std::vector<Integer> c;
    IntPoint x;
    for (std::size_t i = 0; i < n; ++i) {
      c.emplace_back(static_cast<long>(rng.uniform(-5, 5)));
      x.push_back(rng.uniform(0, u));
    }
    EXPECT_EQ(tie_break(c, u).value(x), cbar_value(c, u, x));
  }
}

TEST(TieBreak, InjectivityAndOrderDetected) {
  // Not injective: c = 0, u = 2 gives cbar = (2, 1) and (0,2) ~ (1,0).
  EXPECT_FALSE(tie_break(ints({0, 0}), 2).injective_on_box(2));
  // Injective but disagreeing with c: cbar = (-2, 5) puts (0,1) (c = 1, cbar 5)
  // before (2,2) (c = 0, cbar 6).
  auto odd = tie_break(ints({-1, 1}), 2);
  EXPECT_EQ(odd.cbar, ints({-2, 5}));
  EXPECT_TRUE(odd.injective_on_box(2));
  EXPECT_FALSE(respects_objective(odd, ints({-1, 1}), 2));
  EXPECT_TRUE(respects_objective(tie_break(ints({1, 1}), 2), ints({1, 1}), 2));
  EXPECT_THROW(ILPInstance(2, {}, ints({0, 0}), 2), InvalidInput);
}

TEST(SolveSmallIp, Examples) {
  auto cbar = tie_break(ints({1, 1}), 2);
  IntegerBox box({0, 0}, {2, 2});
  EXPECT_EQ(solve_small_ip({}, cbar, {}, box), (IntPoint{0, 0}));
  EXPECT_EQ(solve_small_ip({row({-1, -1}, -3)}, cbar, {}, box), (IntPoint{1, 2}));
  EXPECT_FALSE(solve_small_ip({row({1, 0}, -1)}, cbar, {}, box).has_value());
}

TEST(SolveSmallIp, AgreesWithEnumeration) {
  Rng rng(8);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::int64_t u = rng.uniform(1, 5);
    std::vector<Integer> c;
    for (std::size_t i = 0; i < n; ++i)
      c.emplace_back(static_cast<long>(rng.uniform(-3, 3)));
    auto cbar = tie_break(c, u);
    if (!cbar.injective_on_box(u))
      continue;
    std::vector<LinearInequality> rows;
    for (int r = 0; r < 3; ++r) {
      RatVector a(n);
      for (auto &v : a)
        v = Rational(rng.uniform(-3, 3), rng.uniform(1, 3));
      if (std::all_of(a.begin(), a.end(), [](const Rational &v) { return v == 0; }))
        a[0] = 1;
      rows.emplace_back(a, Rational(rng.uniform(-2, 6), 2));
    }
    SolveStats stats;
    auto got = solve_small_ip(rows, cbar, {}, IntegerBox(IntPoint(n, 0), IntPoint(n, u)), &stats);
    auto want = brute_l_best(rows, c, u, 1);
    if (want.empty())
      EXPECT_FALSE(got.has_value());
    else
      EXPECT_EQ(got, want[0]);
    EXPECT_GE(stats.lp_solves, 1u);
  }
}

TEST(LBest, Examples) {
  ILPInstance inst(2, {row({1, 0}, -1), row({-1, -1}, -1)}, ints({1, 1}), 2);
  std::vector<std::size_t> none;
  EXPECT_EQ(l_best(inst, none, 3), (std::vector<IntPoint>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(l_best(inst, none, 3), brute_l_best({}, ints({1, 1}), 2, 3));
  EXPECT_EQ(l_best(inst, none, 20).size(), 9u);
  std::vector<std::size_t> infeasible{0};
  EXPECT_TRUE(l_best(inst, infeasible, 2).empty());
  std::vector<std::size_t> bad{5};
  EXPECT_THROW(l_best(inst, bad, 1), InvalidInput);
  EXPECT_THROW(l_best(inst, none, 0), InvalidInput);
}

TEST(LBest, MatchesOracleAndPrefixProperty) {
  Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto inst = random_instance(n, static_cast<std::size_t>(rng.uniform(1, 5)), rng.uniform(1, 3), rng);
    auto all = iota(inst.size());
    auto l = static_cast<std::size_t>(rng.uniform(1, 4));
    auto got = l_best(inst, all, l);
    EXPECT_EQ(got, brute_l_best(inst.rows(), inst.objective(), inst.upper(), l));
    EXPECT_EQ(got, l_best_brute_force(inst, all, l));
    auto shorter = l_best(inst, all, 1);
    EXPECT_TRUE(std::equal(shorter.begin(), shorter.end(), got.begin()));
    for (std::size_t i = 1; i < got.size(); ++i)
      EXPECT_LT(inst.tie_breaker().value(got[i - 1]), inst.tie_breaker().value(got[i]));
  }
}

TEST(Violates, Examples) {
  // Row 0: redundant. Row 1: x1 + x2 >= 1. Row 2: x1 <= -1.
  ILPInstance inst(2, {row({1, 1}, 10), row({-1, -1}, -1), row({1, 0}, -1)}, ints({1, 1}), 2);
  LBestOracle oracle(inst, 1);
  std::vector<std::size_t> none;
  EXPECT_FALSE(oracle.violates(none, 0, ViolatorRule::Degenerate));
  EXPECT_TRUE(oracle.violates(none, 1, ViolatorRule::Degenerate));
  std::vector<std::size_t> one{1};
  EXPECT_EQ(oracle.tuple(one), (std::vector<IntPoint>{{0, 1}}));
  EXPECT_EQ(oracle.violators(none, ViolatorRule::Degenerate), (std::vector<std::size_t>{1, 2}));

  // G infeasible: nothing violates under the degenerate rule.
  std::vector<std::size_t> empty_set{2};
  EXPECT_FALSE(oracle.violates(empty_set, 0, ViolatorRule::Degenerate));
  EXPECT_FALSE(oracle.violates(empty_set, 1, ViolatorRule::Degenerate));
  EXPECT_THROW(oracle.violates(one, 1, ViolatorRule::Degenerate), PreconditionError);

  // Only 9 feasible points, l = 10: degenerate everywhere.
  LBestOracle big(inst, 10);
  EXPECT_FALSE(big.violates(none, 1, ViolatorRule::Degenerate));
  EXPECT_TRUE(big.violates(none, 1, ViolatorRule::Extended));
  EXPECT_TRUE(big.violators(none, ViolatorRule::Degenerate).empty());
}

TEST(Clarkson, SmallInstanceUsesBruteForce) {
  Rng rng(4);
  ILPInstance inst(2, rows_through(rng, {1, 1}, 5), ints({1, 2}), 4);
  auto b = clarkson_basis(inst, 1, {});
  EXPECT_TRUE(b.brute_force_path);
  EXPECT_TRUE(b.verified);
  EXPECT_LE(Integer(static_cast<unsigned long>(b.indices.size())), c_upper(2, 1));
  EXPECT_EQ(b.tuple, brute_l_best(inst.rows(), inst.objective(), 4, 1));
}

TEST(Clarkson, ManyRedundantRows) {
  Rng rng(6);
  auto rows = rows_through(rng, {3, 4}, 10);
  for (long i = 0; i < 190; ++i)
    rows.push_back(row({1, 1}, 20 + i));
  ILPInstance inst(2, rows, ints({1, 1}), 10);
  auto want = brute_l_best(inst.rows(), inst.objective(), 10, 1);
  ASSERT_EQ(want.size(), 1u);
  for (std::uint64_t factor : {9u, 0u}) {
    ClarksonOptions options;
    options.brute_force_factor = factor;
    options.seed = 77;
    auto b = clarkson_basis(inst, 1, options);
    EXPECT_EQ(b.brute_force_path, factor != 0);
    EXPECT_TRUE(b.verified);
    EXPECT_EQ(b.tuple, want);
    EXPECT_LE(Integer(static_cast<unsigned long>(b.indices.size())), Integer(6));
    for (auto i : b.indices)
      EXPECT_LT(i, 10u);
  }
}

TEST(Clarkson, FiveHundredRowsTwoBest) {
  Rng rng(9);
  ILPInstance inst(2, rows_through(rng, {3, 4}, 500), ints({1, 1}), 8);
  auto want = brute_l_best(inst.rows(), inst.objective(), 8, 2);
  ClarksonOptions options;
  options.seed = 5;
  auto b = clarkson_basis(inst, 2, options);
  EXPECT_FALSE(b.brute_force_path);
  EXPECT_TRUE(b.verified);
  EXPECT_EQ(b.tuple, want);
  EXPECT_LE(Integer(static_cast<unsigned long>(b.indices.size())), c_upper(2, 2));
  EXPECT_EQ(brute_l_best(pick(inst.rows(), b.indices), inst.objective(), 8, 2), want);

  auto again = clarkson_basis(inst, 2, options);
  EXPECT_EQ(again.indices, b.indices);
}

TEST(Axioms, RandomChains) {
  Rng rng(10);
  for (int t = 0; t < 5; ++t) {
    auto inst = random_instance(2, 10, 3, rng);
    for (std::size_t l : {1u, 2u, 3u}) {
      auto r = violator_axiom_check(inst, l, 100, static_cast<std::uint64_t>(t));
      EXPECT_TRUE(r.ok());
      EXPECT_EQ(r.trials, 100u);
    }
  }
  ILPInstance empty(1, {row({1}, -1)}, ints({1}), 2);
  auto r = violator_axiom_check(empty, 1, 50, 0);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.degenerate_trials, 0u);
  auto wide = random_instance(2, 13, 2, rng);
  EXPECT_THROW(violator_axiom_check(wide, 1, 1, 0), PreconditionError);
}
