#pragma once

// Independent oracles for the unit and acceptance tests. Nothing here calls
// the library's LP solver or enumerators.

#include <algorithm>
#include <optional>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/random.hpp"

namespace oracle {

using helly::Integer;
using helly::IntPoint;
using helly::Polyhedron;
using helly::Rational;
using helly::RatVector;

inline Polyhedron make(std::size_t n, std::vector<std::pair<std::vector<const char *>, const char *>> rows) {
  std::vector<helly::LinearInequality> out;
  for (auto &[a, b] : rows) {
    RatVector v;
    for (auto *s : a)
      v.push_back(helly::parse_rational(s));
    out.emplace_back(v, helly::parse_rational(b));
  }
  return Polyhedron(n, out);
}

/// lo <= x_i <= hi for every coordinate.
inline Polyhedron box(std::size_t n, const Rational &lo, const Rational &hi) {
  std::vector<helly::LinearInequality> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    rows.emplace_back(e, hi);
    e[i] = -1;
    rows.emplace_back(e, -lo);
  }
  return Polyhedron(n, rows);
}

/// Unique solution of A x = b (A is rows x cols), or nullopt when the system
/// is inconsistent or has a nontrivial kernel. Plain Gauss-Jordan.
inline std::optional<RatVector> solve_unique(std::vector<RatVector> A, RatVector b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0)
      ++p;
    if (p == rows)
      return std::nullopt;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0)
        continue;
      Rational f = A[i][c] / A[r][c];
      for (std::size_t j = c; j < cols; ++j)
        A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols)
    return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0)
      return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < r; ++i)
    x[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
  return x;
}

/// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <class Fn> void for_each_subset(std::size_t n, std::size_t k, Fn &&fn) {
  if (k > n)
    return;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i)
    c[i] = i;
  while (true) {
    fn(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j)
      c[j] = c[j - 1] + 1;
  }
}

/// Vertices of a bounded P: feasible unique solutions of every n x n
/// subsystem taken with equality.
inline std::vector<RatVector> vertices(const Polyhedron &P) {
  const std::size_t n = P.dimension();
  std::vector<RatVector> out;
  for_each_subset(P.size(), n, [&](const std::vector<std::size_t> &idx) {
    std::vector<RatVector> A;
    RatVector b;
    for (auto i : idx) {
      A.push_back(P[i].normal());
      b.push_back(P[i].rhs());
    }
    auto x = solve_unique(A, b);
    if (x && P.contains(*x))
      out.push_back(*x);
  });
  return out;
}

/// Caratheodory: q in conv(X) iff q is a nonnegative affine combination of
/// some affinely independent subset of at most n + 1 points.
inline bool in_hull(const RatVector &q, const std::vector<RatVector> &X) {
  const std::size_t n = q.size();
  for (std::size_t s = 1; s <= std::min(n + 1, X.size()); ++s) {
    bool found = false;
    for_each_subset(X.size(), s, [&](const std::vector<std::size_t> &idx) {
      if (found)
        return;
      std::vector<RatVector> A(n + 1, RatVector(s));
      RatVector b(n + 1);
      for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < n; ++i)
          A[i][j] = X[idx[j]][i];
        A[n][j] = 1;
      }
      for (std::size_t i = 0; i < n; ++i)
        b[i] = q[i];
      b[n] = 1;
      auto lambda = solve_unique(A, b);
      if (lambda && std::all_of(lambda->begin(), lambda->end(),
                                [](const Rational &v) { return v >= 0; }))
        found = true;
    });
    if (found)
      return true;
  }
  return false;
}

/// Integer points of P inside the box, by membership test of every point.
inline std::vector<IntPoint> sweep(const Polyhedron &P, const IntPoint &lo, const IntPoint &hi,
                                   bool strict = false) {
  std::vector<IntPoint> out;
  helly::for_each_point(helly::IntegerBox(lo, hi), [&](const IntPoint &p) {
    if (strict ? P.strictly_contains(p) : P.contains(p))
      out.push_back(p);
  });
  return out;
}

/// Random rational in [lo, hi] with denominator den.
inline Rational random_rational(helly::Rng &rng, std::int64_t lo, std::int64_t hi,
                                std::int64_t den) {
  Rational r(helly::to_integer(rng.uniform(lo * den, hi * den)), helly::to_integer(den));
  r.canonicalize();
  return r;
}

/// Random polytope contained in [-R, R]^n: the box rows plus `extra` random
/// rows through random rational offsets.
inline Polyhedron random_bounded(helly::Rng &rng, std::size_t n, std::size_t extra,
                                 std::int64_t R) {
  Polyhedron P = box(n, Rational(-R), Rational(R));
  for (std::size_t k = 0; k < extra; ++k) {
    RatVector a(n);
    bool nonzero = false;
    for (auto &v : a) {
      v = helly::to_rational(rng.uniform(-4, 4));
      nonzero = nonzero || v != 0;
    }
    if (!nonzero)
      a[0] = 1;
    P = P.with_row(helly::LinearInequality(a, random_rational(rng, -2, 3, 4)));
  }
  return P;
}

} // namespace oracle
