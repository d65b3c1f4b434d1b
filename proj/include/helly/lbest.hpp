#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/random.hpp"

namespace helly {

/// Composite objective u^n c + sum_i u^(n-i) e_i.
struct TieBreakObjective {
  std::vector<Integer> cbar;

  Integer value(const IntPoint &x) const;
  RatVector as_rational() const;
  /// No two points of {0..u}^n share a value. Exhaustive; throws InvalidInput
  /// when the box has more than `limit` points.
  bool injective_on_box(std::int64_t u, std::uint64_t limit = 1'000'000) const;
};

/// Requires u >= 1.
TieBreakObjective tie_break(const std::vector<Integer> &c, std::int64_t u);

/// Whether sorting {0..u}^n by cbar never puts a point of larger c value
/// before one of smaller c value.
bool respects_objective(const TieBreakObjective &cbar, const std::vector<Integer> &c,
                        std::int64_t u);

/// min c.x over integer x in {0..u}^n subject to the rows. Rows are scaled
/// to integer coefficients on construction. Instances whose cbar is not
/// injective on the box are rejected, since their l best points would not be
/// well defined.
class ILPInstance {
public:
  ILPInstance(std::size_t n, std::vector<LinearInequality> rows, std::vector<Integer> c,
              std::int64_t u);

  std::size_t dimension() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<LinearInequality> &rows() const { return rows_; }
  const std::vector<Integer> &objective() const { return c_; }
  std::int64_t upper() const { return u_; }
  const TieBreakObjective &tie_breaker() const { return cbar_; }
  IntegerBox box() const;

private:
  std::size_t n_;
  std::vector<LinearInequality> rows_;
  std::vector<Integer> c_;
  std::int64_t u_;
  TieBreakObjective cbar_;
};

struct SolveStats {
  std::uint64_t ip_solves = 0;
  std::uint64_t lp_solves = 0;
  std::uint64_t nodes = 0;
};

/// cbar-minimal integer point of the box satisfying `rows` and `cuts`, by
/// depth-first branch-and-bound on the exact LP relaxation. Branches on the
/// most fractional coordinate (lowest index on ties), down branch first.
std::optional<IntPoint> solve_small_ip(const std::vector<LinearInequality> &rows,
                                       const TieBreakObjective &cbar,
                                       const std::vector<LinearInequality> &cuts,
                                       const IntegerBox &box, SolveStats *stats = nullptr);

/// The (at most) l cbar-smallest feasible points of the rows G, strictly
/// increasing in cbar. Each optimum x adds the cut cbar.x >= cbar.x_prev + 1.
std::vector<IntPoint> l_best(const ILPInstance &inst, std::span<const std::size_t> G,
                             std::size_t l, SolveStats *stats = nullptr);

/// Same result by sorting every feasible box point.
std::vector<IntPoint> l_best_brute_force(const ILPInstance &inst,
                                         std::span<const std::size_t> G, std::size_t l);

enum class ViolatorRule {
  /// A row violates G iff it changes the l-tuple; nothing violates when G
  /// has fewer than l feasible points.
  Degenerate,
  /// A row violates G iff it changes the l-tuple, also when G has fewer than
  /// l feasible points. Under this rule V(B) = V(H) forces equal tuples.
  Extended,
};

/// Memoised l-tuples of constraint subsets of one instance.
class LBestOracle {
public:
  LBestOracle(const ILPInstance &inst, std::size_t l);

  const ILPInstance &instance() const { return *inst_; }
  std::size_t l() const { return l_; }

  /// l_best(G); G need not be sorted.
  const std::vector<IntPoint> &tuple(std::span<const std::size_t> G);

  /// Literal test: compares the tuples of G and G + h. Requires h not in G.
  bool violates(std::span<const std::size_t> G, std::size_t h, ViolatorRule rule);

  /// {h not in G : h violates G}, using the tuple of G only.
  std::vector<std::size_t> violators(std::span<const std::size_t> G, ViolatorRule rule);

  std::uint64_t tuple_calls() const { return calls_; }
  std::uint64_t cache_hits() const { return hits_; }
  const SolveStats &solve_stats() const { return stats_; }

private:
  const ILPInstance *inst_;
  std::size_t l_;
  std::map<std::vector<std::size_t>, std::vector<IntPoint>> cache_;
  std::uint64_t calls_ = 0;
  std::uint64_t hits_ = 0;
  SolveStats stats_;
};

struct ClarksonOptions {
  std::uint64_t seed = 0;
  /// Brute force when m <= brute_force_factor * delta^2.
  std::uint64_t brute_force_factor = 9;
  /// Sample size sample_factor * delta^2.
  std::uint64_t sample_factor = 6;
  /// Reweight when violator_factor * delta * w(V) <= w(H).
  std::uint64_t violator_factor = 3;
  std::uint64_t max_iterations = 100'000;
};

struct BasisStats {
  std::uint64_t iterations = 0;
  std::uint64_t reweightings = 0;
  std::uint64_t tuple_calls = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t ip_solves = 0;
  std::uint64_t lp_solves = 0;
  std::uint64_t nodes = 0;
};

struct BasisResult {
  std::vector<std::size_t> indices;
  std::vector<IntPoint> tuple;
  Integer bound;
  bool brute_force_path = false;
  /// l_best(indices) equals l_best over all rows.
  bool verified = false;
  BasisStats stats;
};

/// Inclusion-minimal subset of all rows with the same l-tuple, by deletion in
/// ascending index order.
BasisResult brute_force_basis(const ILPInstance &inst, std::size_t l);

/// Randomised basis computation with integer weights: sample, solve the
/// sample by deletion, double the weights of its violators when they are
/// light, stop when nothing violates. Uses the extended violator rule.
BasisResult clarkson_basis(const ILPInstance &inst, std::size_t l,
                           const ClarksonOptions &options = {});

struct AxiomReport {
  std::size_t trials = 0;
  std::size_t consistency_failures = 0;
  std::size_t locality_failures = 0;
  std::size_t extended_locality_failures = 0;
  /// Literal violates() disagreeing with the tuple-only violator set.
  std::size_t rule_mismatches = 0;
  /// Trials whose smaller set had fewer than l feasible points.
  std::size_t degenerate_trials = 0;
  std::uint64_t tuple_calls = 0;
  bool ok() const {
    return consistency_failures == 0 && locality_failures == 0 &&
           extended_locality_failures == 0 && rule_mismatches == 0;
  }
};

/// Random chains F <= G <= H with G disjoint from V(F); checks V(G) = V(F)
/// under both rules and G disjoint from V(G). V is computed exhaustively
/// with the literal violates() and cross-checked against violators(). Requires at most 12 rows.
AxiomReport violator_axiom_check(const ILPInstance &inst, std::size_t l, std::size_t trials,
                                 std::uint64_t seed);

/// Random instance: m rows with integer coefficients in [-3,3], each
/// satisfied by some random box point, and c with entries in [-3,3] redrawn
/// until cbar is injective on the box.
ILPInstance random_instance(std::size_t n, std::size_t m, std::int64_t u, Rng &rng);

} // namespace helly
