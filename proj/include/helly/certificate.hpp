#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/lattice.hpp"

namespace helly {

struct VerdictValid {};

/// The subsystem has a different integer point set. `extra_point` lies in
/// the subsystem but not in the original set; when the subsystem is
/// unbounded `ray` is an integer recession direction through it.
struct VerdictInvalid {
  std::optional<IntPoint> extra_point;
  std::optional<IntPoint> missing_point;
  std::optional<IntPoint> ray;
};

/// Unbounded subsystem, no integer point expected and none found.
struct VerdictInconclusive {};

using Verdict = std::variant<VerdictValid, VerdictInvalid, VerdictInconclusive>;

std::string verdict_name(const Verdict &v);
inline bool is_valid(const Verdict &v) { return std::holds_alternative<VerdictValid>(v); }

/// Compares the integer points of the rows S of P with `expected`, which
/// must be the exact point set of P.
Verdict check_certificate(const Polyhedron &P, std::span<const std::size_t> subset,
                          const LatticePointSet &expected, const EnumOptions &options = {});

struct AuditEntry {
  /// Row considered for removal (greedy) or the subset checked (minimum).
  std::vector<std::size_t> rows;
  bool accepted;
  Verdict verdict;
};

struct Certificate {
  std::vector<std::size_t> subset;
  std::size_t k = 0;
  Verdict verdict;
  bool within_bound = false;
  Integer bound;
  LatticePointSet points;
  std::vector<AuditEntry> audit;
  std::size_t checks = 0;
  std::size_t pruned = 0;
  std::size_t inconclusive = 0;
};

/// Drops rows in ascending index order whenever the remaining rows still
/// certify the same integer points. The result is irredundant.
/// Throws PreconditionError unless enumerate(P) is exact.
Certificate greedy_certificate(const Polyhedron &P, const EnumOptions &options = {});

/// Smallest certifying subset, ties broken lexicographically. Subsets are
/// scanned by size; a subset is skipped when it misses every row cutting off
/// some extra point already seen. Requires at most 24 rows. Throws
/// SearchLimitExceeded if no subset of size <= size_limit certifies.
Certificate minimum_certificate(const Polyhedron &P, std::size_t size_limit,
                                const EnumOptions &options = {});

} // namespace helly
