#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {

/// Finite set of integer points kept sorted lexicographically, without
/// duplicates.
class LatticePointSet {
public:
  LatticePointSet() = default;
  /// Sorts and removes duplicates.
  explicit LatticePointSet(std::vector<IntPoint> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const IntPoint &p) const;
  const std::vector<IntPoint> &points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const IntPoint &operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const LatticePointSet &, const LatticePointSet &) = default;

private:
  std::vector<IntPoint> points_;
};

struct EnumExact {
  LatticePointSet points;
};
struct EnumCapExceeded {
  std::uint64_t cap;
};
/// `point` lies in P and `ray` is a nonzero primitive integer recession
/// direction, so point + t*ray is in P for every t >= 0.
struct EnumUnboundedWithWitness {
  IntPoint point;
  IntPoint ray;
};
/// P is unbounded and the finite search found no integer point. `searched`
/// is empty when a bounded coordinate already has no integer value.
struct EnumUnboundedInconclusive {
  std::optional<IntegerBox> searched;
};

using EnumOutcome = std::variant<EnumExact, EnumCapExceeded, EnumUnboundedWithWitness,
                                 EnumUnboundedInconclusive>;

struct EnumOptions {
  std::uint64_t cap = 1'000'000;
  /// Free coordinates are searched up to margin_factor times the extent of
  /// the bounded coordinates, and never less than min_margin.
  std::int64_t margin_factor = 10;
  std::int64_t min_margin = 50;
};

/// All integer points of P, by recursive branching on x_1, ..., x_n with LP
/// bounds recomputed at every level.
EnumOutcome enumerate(const Polyhedron &P, const EnumOptions &options = {});

/// Integer points strictly inside every inequality.
EnumOutcome interior_integer_points(const Polyhedron &P, const EnumOptions &options = {});

struct CountExact {
  std::uint64_t k;
};
struct CountMoreThan {
  std::uint64_t cap;
};
struct CountInfiniteWitnessed {
  IntPoint point;
  IntPoint ray;
};
struct CountInconclusive {};

using CountOutcome =
    std::variant<CountExact, CountMoreThan, CountInfiniteWitnessed, CountInconclusive>;

CountOutcome count(const Polyhedron &P, const EnumOptions &options = {});

/// Lexicographically first integer point of P inside `box`, if any.
std::optional<IntPoint> find_integer_point(const Polyhedron &P, const IntegerBox &box);

/// Scales a nonzero rational direction to the primitive integer vector
/// pointing the same way.
IntPoint primitive_integer_direction(const RatVector &ray);

} // namespace helly

namespace helly {

/// The lexicographically first `limit` integer points of a bounded P.
/// Throws PreconditionError when P is unbounded.
std::vector<IntPoint> first_integer_points(const Polyhedron &P, std::uint64_t limit);

} // namespace helly
