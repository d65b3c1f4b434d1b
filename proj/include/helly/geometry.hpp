#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "helly/rational.hpp"

namespace helly {

using RatVector = std::vector<Rational>;

/// Integer point of Z^n. Desk-scale coordinates always fit in 64 bits;
/// conversions from exact bounds are overflow-checked.
using IntPoint = std::vector<std::int64_t>;

RatVector to_rational(const IntPoint &p);
Rational dot(const RatVector &a, const RatVector &b);
Rational dot(const RatVector &a, const IntPoint &p);

/// Position of a point relative to an inequality a.x <= beta.
enum class Side { StrictlySatisfied, Tight, Violated };

class LinearInequality {
public:
  /// Rejects the zero normal.
  LinearInequality(RatVector normal, Rational rhs);

  const RatVector &normal() const { return normal_; }
  const Rational &rhs() const { return rhs_; }
  std::size_t dimension() const { return normal_.size(); }

  Rational lhs(const RatVector &p) const;
  Rational lhs(const IntPoint &p) const;

  Side evaluate(const RatVector &p) const;
  Side evaluate(const IntPoint &p) const;

  /// The reversed inequality -a.x <= rhs.
  LinearInequality negated(Rational rhs) const;
  /// Row multiplied by the lcm of all denominators, so every entry is integral.
  LinearInequality integer_scaled() const;

  friend bool operator==(const LinearInequality &, const LinearInequality &) = default;

private:
  RatVector normal_;
  Rational rhs_;
};

Side evaluate(const LinearInequality &ineq, const RatVector &p);

/// P = {x in R^n : a_i.x <= beta_i}. Row indices are stable for the lifetime
/// of the object; subsystems keep a mapping back to the parent through the
/// index list that produced them.
class Polyhedron {
public:
  explicit Polyhedron(std::size_t dimension, std::vector<LinearInequality> rows = {});

  std::size_t dimension() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  const LinearInequality &operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<LinearInequality> &rows() const { return rows_; }

  /// Rows at the given indices, in the order given. Throws on out-of-range.
  Polyhedron subsystem(std::span<const std::size_t> indices) const;
  /// All rows except `index`.
  Polyhedron without(std::size_t index) const;
  Polyhedron with_row(LinearInequality row) const;

  bool contains(const IntPoint &p) const;
  bool contains(const RatVector &p) const;
  /// Every inequality holds strictly.
  bool strictly_contains(const IntPoint &p) const;

  /// Integer points strictly inside P are exactly the integer points of the
  /// returned polyhedron: each row is scaled to integers and its rhs lowered
  /// to ceil(rhs) - 1.
  Polyhedron integer_interior() const;
  /// Same integer points: each row becomes a primitive integer normal with
  /// its rhs rounded down.
  Polyhedron integer_rounded() const;

  friend bool operator==(const Polyhedron &, const Polyhedron &) = default;

private:
  std::size_t n_;
  std::vector<LinearInequality> rows_;
};

/// Axis-aligned box of integer points; lower[i] <= upper[i].
struct IntegerBox {
  IntPoint lower;
  IntPoint upper;

  IntegerBox(IntPoint lo, IntPoint hi);
  std::size_t dimension() const { return lower.size(); }
  bool contains(const IntPoint &p) const;
  /// Number of integer points, saturating at `limit`.
  std::uint64_t volume(std::uint64_t limit) const;

  friend bool operator==(const IntegerBox &, const IntegerBox &) = default;
};

/// Calls fn(point) for every point of the box in lexicographic order.
template <class Fn> void for_each_point(const IntegerBox &box, Fn &&fn) {
  const std::size_t n = box.dimension();
  IntPoint p = box.lower;
  if (n == 0) {
    fn(p);
    return;
  }
  while (true) {
    fn(p);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < box.upper[i]) {
        ++p[i];
        break;
      }
      p[i] = box.lower[i];
      if (i == 0)
        return;
    }
  }
}

} // namespace helly
