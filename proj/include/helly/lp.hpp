#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {

enum class Sense { Minimize, Maximize };

struct LPOptimal {
  Rational value;
  RatVector point;
};

/// Recession direction along which the objective improves without bound:
/// a.ray <= 0 for every row, objective.ray < 0 (minimize) or > 0 (maximize).
struct LPUnbounded {
  RatVector ray;
};

struct LPInfeasible {};

using LPResult = std::variant<LPOptimal, LPUnbounded, LPInfeasible>;

/// Exact optimum of objective.x over P. Deterministic: two-phase simplex with
/// Bland's rule on the dual standard form A^T y = -c, y >= 0; the primal
/// optimum is recovered from the simplex multipliers.
LPResult lp_solve(const Polyhedron &P, const RatVector &objective, Sense sense);

/// Some point of P, or nullopt when P is empty.
std::optional<RatVector> feasible_point(const Polyhedron &P);

struct BoxUnbounded {
  std::size_t coordinate;
  RatVector ray;
};
struct BoxInfeasible {};
/// P is nonempty but some coordinate range contains no integer.
struct BoxNoIntegers {
  std::size_t coordinate;
};

using BoxResult = std::variant<IntegerBox, BoxUnbounded, BoxInfeasible, BoxNoIntegers>;

/// Per coordinate, ceil(min x_i) .. floor(max x_i) computed by 2n LPs.
BoxResult bounding_box(const Polyhedron &P);

/// q in conv(X), decided by exact LP feasibility of the convex combination
/// system. Throws InvalidInput for empty X or mismatched dimensions.
bool hull_membership(const RatVector &q, const std::vector<RatVector> &X);
bool hull_membership(const IntPoint &q, const std::vector<IntPoint> &X);

namespace lp {

/// Dense system a_i.x <= b_i with no restriction on the normals (zero rows
/// are allowed). Used internally by the enumerators, where fixing variables
/// produces zero rows.
struct InequalitySystem {
  std::size_t n = 0;
  std::vector<RatVector> a;
  RatVector b;

  std::size_t rows() const { return b.size(); }
  void add(RatVector row, Rational rhs) {
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
};

InequalitySystem system_of(const Polyhedron &P);

LPResult solve(const InequalitySystem &sys, const RatVector &objective, Sense sense);
std::optional<RatVector> feasible_point(const InequalitySystem &sys);

/// min f.y subject to M y = g, y >= 0 where M is rows x cols, row-major.
struct StandardForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> M;
  RatVector g;
  RatVector f;

  Rational &at(std::size_t r, std::size_t c) { return M[r * cols + c]; }
  const Rational &at(std::size_t r, std::size_t c) const { return M[r * cols + c]; }
};

struct StandardResult {
  enum class Status { Optimal, Unbounded, Infeasible } status;
  /// Primal values y (Optimal).
  RatVector y;
  /// Simplex multipliers pi of the original rows. At an optimum,
  /// M^T pi <= f componentwise and g.pi equals the optimum. When infeasible,
  /// a Farkas certificate: M^T pi <= 0 and g.pi > 0.
  RatVector pi;
  Rational value;
  std::size_t pivots = 0;
};

/// Two-phase simplex with Bland's rule. When `phase_one_only` is set the
/// objective is ignored and Optimal means feasible.
StandardResult solve_standard(const StandardForm &sf, bool phase_one_only = false);

} // namespace lp

} // namespace helly
