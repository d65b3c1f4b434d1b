#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/lattice.hpp"
#include "helly/random.hpp"

namespace helly {

/// Nonempty finite set of distinct integer points in Z^n. Insertion order is
/// kept; it is the scan order used by parity_midpoint.
class PointConfiguration {
public:
  PointConfiguration(std::size_t n, std::vector<IntPoint> points);

  std::size_t dimension() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<IntPoint> &points() const { return points_; }
  const IntPoint &operator[](std::size_t i) const { return points_[i]; }
  bool contains(const IntPoint &p) const;

  /// This configuration with the given points appended.
  PointConfiguration with(const std::vector<IntPoint> &extra) const;

private:
  std::size_t n_;
  std::vector<IntPoint> points_;
};

/// Support hyperplane property: no point lies in the convex hull of the
/// others, i.e. every point is a vertex of conv(X).
bool has_shp(const PointConfiguration &X);

/// z = (y1 + y2) / 2 for the first pair (in stored order) with y1 = y2 mod 2.
/// Requires |X| >= 2^n + 1 and SHP; asserts z in conv(X) \ X.
IntPoint parity_midpoint(const PointConfiguration &X);

/// Strict sides of a hyperplane through the splitting point(s).
struct Split {
  std::vector<IntPoint> below;
  std::vector<IntPoint> above;
  /// Points of X on the hyperplane (only for the two-point split, at most 2).
  std::vector<IntPoint> on_hyperplane;
  std::vector<Integer> normal;
  std::uint64_t parameter = 0;
};

/// Hyperplane through z with normal (1, t, ..., t^(n-1)) for the smallest
/// t >= 1 that avoids every point of X. Requires SHP and z in conv(X) \ X;
/// asserts that both sides augmented by z keep the SHP.
Split split_by_point(const PointConfiguration &X, const IntPoint &z);

/// Hyperplane containing the line through z1, z2 with normal taken from the
/// moment curve projected orthogonally to z2 - z1, avoiding every point of X
/// off that line. Requires n >= 2, SHP, z1 != z2 both in conv(X) \ X;
/// asserts |below| + |above| >= |X| - 2 and the SHP of both sides augmented
/// by {z1, z2}.
Split split_by_two_points(const PointConfiguration &X, const IntPoint &z1, const IntPoint &z2);

/// (z1, z1 + (z2 - z1)/g) with g the gcd of the difference: the lattice
/// point of [z1, z2] adjacent to z1.
std::pair<IntPoint, IntPoint> adjacent_lattice_pair(const IntPoint &z1, const IntPoint &z2);

/// Integer points of conv(X) not in X.
LatticePointSet extra_lattice_points(const PointConfiguration &X);

/// Same set, but stops once `stop_at` points are found. Candidates are
/// visited nearest to the centroid first.
std::vector<IntPoint> some_extra_lattice_points(const PointConfiguration &X, std::size_t stop_at);

enum class LemmaVerdict { Holds, Vacuous, Counterexample };
std::string to_string(LemmaVerdict v);

struct MainLemmaCheck {
  LemmaVerdict verdict;
  std::size_t threshold;
  std::size_t required;
  /// Extra lattice points found, capped at `required`.
  std::size_t found;
};

/// Vacuous unless X has the SHP and |X| >= k 2^n - 2k + 3; otherwise holds
/// iff conv(X) \ X has at least floor(3k/2) integer points. Requires n >= 2.
MainLemmaCheck check_main_lemma(const PointConfiguration &X, std::size_t k);

struct ReplayStep {
  std::string kind;
  std::vector<IntPoint> points;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t k = 0;
};

/// Diagnostic replay of the inductive argument behind check_main_lemma:
/// midpoints, one-point splits, adjacency normalisation, two-point splits
/// and the replacement loop. Capped at 10 |X| steps.
struct ReplayTrace {
  std::vector<ReplayStep> steps;
  bool overflow = false;
  LatticePointSet found;
};

ReplayTrace replay_main_lemma(const PointConfiguration &X, std::size_t k);

/// Random configuration with the SHP and exactly `size` points: integer
/// candidates are drawn from a random ellipsoidal shell, reduced to the
/// vertices of their hull, and a random subset of the vertices is kept.
PointConfiguration random_shp_configuration(std::size_t n, std::size_t size, Rng &rng);

enum class LemmaKind { Shp, Midpoint, Split1, Split2, Main };
std::string to_string(LemmaKind kind);
std::optional<LemmaKind> parse_lemma_kind(const std::string &name);

struct CampaignFailure {
  std::size_t trial;
  std::string message;
  std::vector<IntPoint> configuration;
};

struct CampaignReport {
  LemmaKind lemma;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t holds = 0;
  std::size_t vacuous = 0;
  std::vector<CampaignFailure> counterexamples;
  /// FNV-1a digest over every generated configuration and its outcome.
  std::uint64_t digest = 0;
};

/// Randomised campaign. Trial i uses derive_seed(seed, i); trials are split
/// over `threads` workers and merged in trial order. Midpoint, Split1 and
/// Split2 trials run the chain of constructions up to the named one.
CampaignReport run_campaign(LemmaKind kind, std::size_t n, std::size_t k, std::size_t trials,
                            std::uint64_t seed, unsigned threads = 1);

/// check_main_lemma(X, 1) over every subset of {0,1,2}^2 with |X| >= 5.
CampaignReport exhaustive_small_grid();

} // namespace helly
