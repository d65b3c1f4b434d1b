#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {

/// Origin of each row of the witness polytope. Type1/Type2 carry a single
/// coordinate j, Type3/Type4 a subset N with |N| >= 2. Coordinates are
/// 1-based, matching the usual statement of the construction.
struct WitnessTag {
  enum class Kind { Type1, Type2, Type3, Type4 };
  Kind kind;
  std::vector<unsigned> set;

  std::string to_string() const;
  friend bool operator==(const WitnessTag &, const WitnessTag &) = default;
};

/// The polytope W_n with 2(2^n - 1) facets, one interior integer point (the
/// origin) and exactly one integer point in the relative interior of each
/// facet.
struct WitnessPolytope {
  unsigned n;
  Polyhedron poly;
  std::vector<WitnessTag> tags;

  /// The unique feasible integer point tight on row i.
  IntPoint expected_tight_point(std::size_t i) const;
  /// Each row multiplied by the lcm of its denominators.
  Polyhedron integer_scaled() const;
};

/// Rows: Type1 j = 1..n, Type2 j = 1..n, Type3 over N, then Type4 over N,
/// with subsets ordered by cardinality and then lexicographically.
/// Throws InvalidInput for n < 2.
WitnessPolytope build_witness(unsigned n);

/// Subsets of {1..n} with at least two elements in canonical order.
std::vector<std::vector<unsigned>> canonical_subsets(unsigned n);

/// Membership rule for y in {-1,0,1}^n: y = 0, or the first nonzero entry is
/// +1 and all later ones are in {-1,0}, or it is -1 and all later ones are
/// in {0,1}. Throws InvalidInput for other entries.
bool classify_feasible(const IntPoint &y);

/// Every point of [-3,3]^n with some |y_j| >= 2 violates a row of P.
bool norm_check(const WitnessPolytope &P);

struct FacetDiagnostic {
  std::size_t index;
  std::string tag;
  std::vector<IntPoint> tight_points;
  bool strictly_inside_others = false;
  bool matches_expected = false;
  std::size_t interior_after_removal = 0;
  /// Dropping the row made the interior unbounded with an integer witness.
  bool interior_unbounded_after_removal = false;
};

struct VerificationReport {
  bool interior_ok = false;
  bool facet_tight_ok = false;
  bool removal_ok = false;
  std::vector<IntPoint> interior_points;
  std::size_t feasible_count = 0;
  std::map<std::size_t, IntPoint> tight_point_per_facet;
  std::vector<FacetDiagnostic> facets;

  bool all_ok() const { return interior_ok && facet_tight_ok && removal_ok; }
};

/// Checks, by exact enumeration: the only interior integer point is the
/// origin; each row is tight at exactly one feasible integer point which
/// lies strictly inside every other row, all distinct and equal to the
/// expected one; dropping any row yields at least two interior points.
VerificationReport verify(const WitnessPolytope &P);

} // namespace helly
