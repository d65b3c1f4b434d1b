#include "helly/lemma_lab.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "helly/errors.hpp"
#include "helly/lp.hpp"

namespace helly {

namespace {

std::string format_point(const IntPoint &p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::vector<Integer> moment_curve(std::size_t n, std::uint64_t t) {
  std::vector<Integer> f(n);
  Integer power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = power;
    power *= static_cast<unsigned long>(t);
  }
  return f;
}

Integer dot(const std::vector<Integer> &f, const IntPoint &p) {
  Integer s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (p[i] != 0)
      s += f[i] * to_integer(p[i]);
  return s;
}

IntPoint minus(const IntPoint &a, const IntPoint &b) {
  IntPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

bool parallel(const IntPoint &w, const IntPoint &d) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (to_integer(w[i]) * to_integer(d[j]) != to_integer(w[j]) * to_integer(d[i]))
        return false;
  return true;
}

bool in_hull(const IntPoint &q, const std::vector<IntPoint> &X) {
  return hull_membership(q, X);
}

// True when f.y > f.x for every other x, which proves y is a vertex.
bool exposed_by(const std::vector<Integer> &f, std::size_t y, const std::vector<IntPoint> &X) {
  Integer top = dot(f, X[y]);
  for (std::size_t i = 0; i < X.size(); ++i)
    if (i != y && dot(f, X[i]) >= top)
      return false;
  return true;
}

// Cheap sufficient test first (direction away from the centroid, optionally
// a second weighted direction), then the exact hull-membership LP. Without
// `exact` a point failing the cheap tests is reported as a non-vertex.
std::vector<bool> vertex_flags(const std::vector<IntPoint> &X,
                               const std::vector<Integer> *weights = nullptr,
                               bool exact = true) {
  const std::size_t n = X.empty() ? 0 : X[0].size();
  std::vector<bool> flags(X.size(), false);
  if (X.size() == 1) {
    flags[0] = true;
    return flags;
  }
  std::vector<Integer> sum(n, 0);
  for (const auto &p : X)
    for (std::size_t i = 0; i < n; ++i)
      sum[i] += to_integer(p[i]);
  const Integer count(static_cast<unsigned long>(X.size()));
  std::vector<RatVector> rational;
  for (std::size_t y = 0; y < X.size(); ++y) {
    std::vector<Integer> f(n);
    for (std::size_t i = 0; i < n; ++i)
      f[i] = count * to_integer(X[y][i]) - sum[i];
    if (exposed_by(f, y, X)) {
      flags[y] = true;
      continue;
    }
    if (weights) {
      for (std::size_t i = 0; i < n; ++i)
        f[i] = (*weights)[i] * to_integer(X[y][i]);
      if (exposed_by(f, y, X)) {
        flags[y] = true;
        continue;
      }
    }
    if (!exact)
      continue;
    if (rational.empty())
      for (const auto &p : X)
        rational.push_back(to_rational(p));
    std::vector<RatVector> others;
    others.reserve(X.size() - 1);
    for (std::size_t j = 0; j < X.size(); ++j)
      if (j != y)
        others.push_back(rational[j]);
    flags[y] = !hull_membership(rational[y], others);
  }
  return flags;
}

void require_shp(const PointConfiguration &X, const char *op) {
  if (!has_shp(X))
    throw PreconditionError(std::string(op) + " requires a configuration with the support "
                                              "hyperplane property");
}

void require_outside_in_hull(const PointConfiguration &X, const IntPoint &z, const char *op) {
  if (z.size() != X.dimension())
    throw InvalidInput(std::string(op) + ": dimension mismatch");
  if (X.contains(z) || !in_hull(z, X.points()))
    throw PreconditionError(std::string(op) + " requires " + format_point(z) +
                            " in conv(X) \\ X");
}

void require_shp_post(const std::vector<IntPoint> &side, const std::vector<IntPoint> &added,
                      std::size_t n, const char *what) {
  std::vector<IntPoint> pts = side;
  pts.insert(pts.end(), added.begin(), added.end());
  if (!has_shp(PointConfiguration(n, std::move(pts))))
    throw PostconditionFailure(std::string(what) + ": augmented side lost the support "
                                                   "hyperplane property");
}

std::size_t main_threshold(std::size_t n, std::size_t k) {
  return k * (std::size_t{1} << n) - 2 * k + 3;
}

} // namespace

PointConfiguration::PointConfiguration(std::size_t n, std::vector<IntPoint> points)
    : n_(n), points_(std::move(points)) {
  if (n_ == 0)
    throw InvalidInput("point configuration dimension must be at least 1");
  if (points_.empty())
    throw InvalidInput("point configuration must be nonempty");
  std::set<IntPoint> seen;
  for (const auto &p : points_) {
    if (p.size() != n_)
      throw InvalidInput("point configuration: dimension mismatch");
    if (!seen.insert(p).second)
      throw InvalidInput("point configuration: repeated point " + format_point(p));
  }
}

bool PointConfiguration::contains(const IntPoint &p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointConfiguration PointConfiguration::with(const std::vector<IntPoint> &extra) const {
  auto pts = points_;
  pts.insert(pts.end(), extra.begin(), extra.end());
  return PointConfiguration(n_, std::move(pts));
}

bool has_shp(const PointConfiguration &X) {
  auto flags = vertex_flags(X.points());
  return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

IntPoint parity_midpoint(const PointConfiguration &X) {
  const std::size_t n = X.dimension();
  if (n >= 63 || X.size() < (std::size_t{1} << n) + 1)
    throw PreconditionError("parity_midpoint requires at least 2^n + 1 points");
  require_shp(X, "parity_midpoint");
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      const auto &a = X[i];
      const auto &b = X[j];
      bool congruent = true;
      for (std::size_t c = 0; c < n && congruent; ++c)
        congruent = (a[c] - b[c]) % 2 == 0;
      if (!congruent)
        continue;
      IntPoint z(n);
      for (std::size_t c = 0; c < n; ++c)
        z[c] = (a[c] + b[c]) / 2;
      if (X.contains(z) || !in_hull(z, X.points()))
        throw PostconditionFailure("parity midpoint " + format_point(z) +
                                   " is not in conv(X) \\ X");
      return z;
    }
  throw PostconditionFailure("no pair congruent mod 2 among 2^n + 1 points");
}

Split split_by_point(const PointConfiguration &X, const IntPoint &z) {
  require_shp(X, "split_by_point");
  require_outside_in_hull(X, z, "split_by_point");
  const std::size_t n = X.dimension();
  for (std::uint64_t t = 1;; ++t) {
    if (t > 1'000'000)
      throw std::logic_error("split_by_point: no admissible moment-curve normal");
    auto f = moment_curve(n, t);
    Integer level = dot(f, z);
    Split s;
    bool ok = true;
    for (const auto &x : X.points()) {
      int c = cmp(dot(f, x), level);
      if (c == 0) {
        ok = false;
        break;
      }
      (c < 0 ? s.below : s.above).push_back(x);
    }
    if (!ok)
      continue;
    s.normal = std::move(f);
    s.parameter = t;
    require_shp_post(s.below, {z}, n, "split_by_point");
    require_shp_post(s.above, {z}, n, "split_by_point");
    return s;
  }
}

Split split_by_two_points(const PointConfiguration &X, const IntPoint &z1, const IntPoint &z2) {
  const std::size_t n = X.dimension();
  if (n < 2)
    throw PreconditionError("split_by_two_points requires n >= 2");
  if (z1 == z2)
    throw PreconditionError("split_by_two_points requires distinct points");
  require_shp(X, "split_by_two_points");
  require_outside_in_hull(X, z1, "split_by_two_points");
  require_outside_in_hull(X, z2, "split_by_two_points");
  const IntPoint d = minus(z2, z1);
  std::vector<Integer> dz(n);
  Integer dd = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dz[i] = to_integer(d[i]);
    dd += dz[i] * dz[i];
  }
  for (std::uint64_t t = 1;; ++t) {
    if (t > 1'000'000)
      throw std::logic_error("split_by_two_points: no admissible normal");
    auto m = moment_curve(n, t);
    Integer md = 0;
    for (std::size_t i = 0; i < n; ++i)
      md += m[i] * dz[i];
    std::vector<Integer> f(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = dd * m[i] - md * dz[i];
      nonzero = nonzero || f[i] != 0;
    }
    if (!nonzero)
      continue;
    Integer level = dot(f, z1);
    Split s;
    bool ok = true;
    for (const auto &x : X.points()) {
      if (parallel(minus(x, z1), d)) {
        s.on_hyperplane.push_back(x);
        continue;
      }
      int c = cmp(dot(f, x), level);
      if (c == 0) {
        ok = false;
        break;
      }
      (c < 0 ? s.below : s.above).push_back(x);
    }
    if (!ok)
      continue;
    s.normal = std::move(f);
    s.parameter = t;
    if (s.on_hyperplane.size() > 2 || s.below.size() + s.above.size() + 2 < X.size())
      throw PostconditionFailure("split_by_two_points discarded more than two points");
    require_shp_post(s.below, {z1, z2}, n, "split_by_two_points");
    require_shp_post(s.above, {z1, z2}, n, "split_by_two_points");
    return s;
  }
}

std::pair<IntPoint, IntPoint> adjacent_lattice_pair(const IntPoint &z1, const IntPoint &z2) {
  if (z1.size() != z2.size())
    throw InvalidInput("adjacent_lattice_pair: dimension mismatch");
  if (z1 == z2)
    throw PreconditionError("adjacent_lattice_pair requires distinct points");
  IntPoint d = minus(z2, z1);
  std::int64_t g = 0;
  for (auto v : d)
    g = std::gcd(g, v);
  IntPoint next = z1;
  for (std::size_t i = 0; i < d.size(); ++i)
    next[i] += d[i] / g;
  return {z1, next};
}

namespace {

std::vector<IntPoint> hull_box_candidates(const PointConfiguration &X) {
  const std::size_t n = X.dimension();
  IntPoint lo = X[0], hi = X[0];
  for (const auto &p : X.points())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  std::vector<IntPoint> out;
  for_each_point(IntegerBox(lo, hi), [&](const IntPoint &p) {
    if (!X.contains(p))
      out.push_back(p);
  });
  return out;
}

} // namespace

LatticePointSet extra_lattice_points(const PointConfiguration &X) {
  std::vector<IntPoint> found;
  for (auto &p : hull_box_candidates(X))
    if (in_hull(p, X.points()))
      found.push_back(std::move(p));
  return LatticePointSet(std::move(found));
}

std::vector<IntPoint> some_extra_lattice_points(const PointConfiguration &X, std::size_t stop_at) {
  std::vector<IntPoint> found;
  if (stop_at == 0)
    return found;
  const std::size_t n = X.dimension();
  const auto count = static_cast<std::int64_t>(X.size());
  IntPoint sum(n, 0);
  for (const auto &p : X.points())
    for (std::size_t i = 0; i < n; ++i)
      sum[i] += p[i];
  // Squared distance to the centroid, scaled by |X|^2.
  auto key = [&](const IntPoint &p) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t d = count * p[i] - sum[i];
      s += d * d;
    }
    return s;
  };
  auto candidates = hull_box_candidates(X);
  std::vector<std::pair<std::int64_t, std::size_t>> order;
  order.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    order.emplace_back(key(candidates[i]), i);
  std::sort(order.begin(), order.end());
  for (const auto &[dist, idx] : order) {
    if (in_hull(candidates[idx], X.points())) {
      found.push_back(candidates[idx]);
      if (found.size() >= stop_at)
        break;
    }
  }
  return found;
}

std::string to_string(LemmaVerdict v) {
  switch (v) {
  case LemmaVerdict::Holds:
    return "holds";
  case LemmaVerdict::Vacuous:
    return "vacuous";
  case LemmaVerdict::Counterexample:
    break;
  }
  return "counterexample";
}

MainLemmaCheck check_main_lemma(const PointConfiguration &X, std::size_t k) {
  const std::size_t n = X.dimension();
  if (n < 2)
    throw PreconditionError("check_main_lemma requires n >= 2");
  if (k < 1)
    throw PreconditionError("check_main_lemma requires k >= 1");
  MainLemmaCheck out{LemmaVerdict::Vacuous, main_threshold(n, k), 3 * k / 2, 0};
  if (X.size() < out.threshold || !has_shp(X))
    return out;
  out.found = some_extra_lattice_points(X, out.required).size();
  out.verdict = out.found >= out.required ? LemmaVerdict::Holds : LemmaVerdict::Counterexample;
  return out;
}

namespace {

class Replayer {
public:
  Replayer(std::size_t n, std::size_t cap) : n_(n), cap_(cap) {}

  void run(PointConfiguration X, std::size_t k) {
    const std::size_t base = (std::size_t{1} << n_) + 1;
    if (k == 0 || X.size() < base)
      return;
    if (k == 1) {
      if (!step())
        return;
      IntPoint z = parity_midpoint(X);
      trace.steps.push_back({"midpoint", {z}, 0, 0, k});
      found_.insert(z);
      return;
    }
    while (step()) {
      IntPoint z1 = parity_midpoint(X);
      trace.steps.push_back({"midpoint", {z1}, 0, 0, k});
      Split s1 = split_by_point(X, z1);
      trace.steps.push_back({"split1", {z1}, s1.below.size(), s1.above.size(), k});
      auto &larger = s1.below.size() > s1.above.size() ? s1.below : s1.above;
      std::vector<IntPoint> y = larger;
      y.push_back(z1);
      found_.insert(z1);
      if (y.size() < base)
        return;
      IntPoint z2 = parity_midpoint(PointConfiguration(n_, y));
      auto [a, b] = adjacent_lattice_pair(z1, z2);
      trace.steps.push_back({"adjacent", {a, b}, 0, 0, k});
      Split s2 = split_by_two_points(X, a, b);
      trace.steps.push_back({"split2", {a, b}, s2.below.size(), s2.above.size(), k});
      found_.insert(a);
      found_.insert(b);
      auto lhs = s2.below, rhs = s2.above;
      if (lhs.size() > rhs.size())
        std::swap(lhs, rhs);
      lhs.push_back(a);
      lhs.push_back(b);
      rhs.push_back(a);
      rhs.push_back(b);
      if (lhs.size() == 2) {
        trace.steps.push_back({"replace", {}, 0, rhs.size(), k});
        X = PointConfiguration(n_, std::move(rhs));
        continue;
      }
      const std::size_t small = lhs.size() - 2;
      const std::size_t p = std::size_t{1} << n_;
      for (std::size_t l = 1; l <= k; ++l) {
        if ((l - 1) * p - 2 * (l - 1) + 1 <= small && small <= l * p - 2 * l) {
          trace.steps.push_back({"recurse", {}, l - 1, k - l, k});
          run(PointConfiguration(n_, std::move(lhs)), l - 1);
          run(PointConfiguration(n_, std::move(rhs)), k - l);
          return;
        }
      }
      trace.steps.push_back({"recurse", {}, k, 0, k});
      run(PointConfiguration(n_, std::move(lhs)), k);
      return;
    }
  }

  ReplayTrace trace;

  void finish() { trace.found = LatticePointSet({found_.begin(), found_.end()}); }

private:
  bool step() {
    if (steps_ >= cap_) {
      trace.overflow = true;
      return false;
    }
    ++steps_;
    return true;
  }

  std::size_t n_;
  std::size_t cap_;
  std::size_t steps_ = 0;
  std::set<IntPoint> found_;
};

} // namespace

ReplayTrace replay_main_lemma(const PointConfiguration &X, std::size_t k) {
  if (X.dimension() < 2)
    throw PreconditionError("replay_main_lemma requires n >= 2");
  require_shp(X, "replay_main_lemma");
  Replayer r(X.dimension(), 10 * X.size());
  r.run(X, k);
  r.finish();
  return r.trace;
}

PointConfiguration random_shp_configuration(std::size_t n, std::size_t size, Rng &rng) {
  if (n == 0 || size == 0)
    throw InvalidInput("random_shp_configuration needs n >= 1 and size >= 1");
  if (n == 1 && size > 2)
    throw InvalidInput("a configuration with the SHP in dimension 1 has at most 2 points");
  std::int64_t base = 1 + static_cast<std::int64_t>(size) / (n == 2 ? 2 : 4);
  if (n == 1)
    base = 2;
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > 0 && attempt % 4 == 0)
      ++base;
    std::vector<std::int64_t> radius(n);
    for (auto &r : radius)
      r = rng.uniform(base, 2 * base);
    const std::size_t want = 2 * size + 4;
    std::set<IntPoint> seen;
    std::vector<IntPoint> candidates;
    for (std::size_t tries = 0; tries < 200 * want && candidates.size() < want; ++tries) {
      IntPoint p(n);
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = rng.uniform(-radius[i], radius[i]);
        s += Rational(to_integer(p[i] * p[i]), to_integer(radius[i] * radius[i]));
      }
      if (s > 1 || s < Rational(1, 2))
        continue;
      if (seen.insert(p).second)
        candidates.push_back(std::move(p));
    }
    if (candidates.size() < size)
      continue;
    // Ellipsoid normal at p, scaled to integers.
    std::vector<Integer> weights(n, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != i)
          weights[i] *= to_integer(radius[j] * radius[j]);
    // Only vertices certified by an exposing functional are kept.
    auto flags = vertex_flags(candidates, &weights, false);
    std::vector<IntPoint> vertices;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (flags[i])
        vertices.push_back(candidates[i]);
    if (vertices.size() < size)
      continue;
    for (std::size_t i = vertices.size() - 1; i > 0; --i) {
      auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)));
      std::swap(vertices[i], vertices[j]);
    }
    vertices.resize(size);
    IntPoint shift(n);
    for (auto &v : shift)
      v = rng.uniform(-3, 3);
    for (auto &v : vertices)
      for (std::size_t i = 0; i < n; ++i)
        v[i] += shift[i];
    return PointConfiguration(n, std::move(vertices));
  }
}

std::string to_string(LemmaKind kind) {
  switch (kind) {
  case LemmaKind::Shp:
    return "shp";
  case LemmaKind::Midpoint:
    return "midpoint";
  case LemmaKind::Split1:
    return "split1";
  case LemmaKind::Split2:
    return "split2";
  case LemmaKind::Main:
    break;
  }
  return "main";
}

std::optional<LemmaKind> parse_lemma_kind(const std::string &name) {
  for (auto k : {LemmaKind::Shp, LemmaKind::Midpoint, LemmaKind::Split1, LemmaKind::Split2,
                 LemmaKind::Main})
    if (to_string(k) == name)
      return k;
  return std::nullopt;
}

namespace {

class Digest {
public:
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (v >> (8 * i)) & 0xff;
      h_ *= 0x100000001b3ULL;
    }
  }
  void add(const IntPoint &p) {
    add(p.size());
    for (auto v : p)
      add(static_cast<std::uint64_t>(v));
  }
  void add(const std::vector<IntPoint> &pts) {
    add(pts.size());
    for (const auto &p : pts)
      add(p);
  }
  std::uint64_t value() const { return h_; }

private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

struct TrialOutcome {
  LemmaVerdict verdict = LemmaVerdict::Holds;
  std::string message;
  std::vector<IntPoint> configuration;
  std::uint64_t digest = 0;
};

TrialOutcome run_trial(LemmaKind kind, std::size_t n, std::size_t k, Rng &rng) {
  TrialOutcome out;
  Digest digest;
  const std::size_t base = (std::size_t{1} << n) + 1;
  try {
    std::size_t size = 0;
    if (kind == LemmaKind::Main)
      size = main_threshold(n, k);
    else if (kind == LemmaKind::Shp)
      size = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(base + 3)));
    else
      size = static_cast<std::size_t>(
          rng.uniform(static_cast<std::int64_t>(base), static_cast<std::int64_t>(2 * base - 1)));
    if (n == 1)
      size = std::min<std::size_t>(size, 2);
    auto X = random_shp_configuration(n, size, rng);
    out.configuration = X.points();
    digest.add(X.points());

    switch (kind) {
    case LemmaKind::Shp: {
      if (!has_shp(X))
        throw PostconditionFailure("hull-vertex configuration fails the SHP test");
      auto extra = some_extra_lattice_points(X, 1);
      digest.add(extra);
      if (!extra.empty() && has_shp(X.with(extra)))
        throw PostconditionFailure("adding the hull point " + format_point(extra[0]) +
                                   " kept the SHP");
      break;
    }
    case LemmaKind::Main: {
      auto check = check_main_lemma(X, k);
      digest.add(check.found);
      out.verdict = check.verdict;
      if (check.verdict == LemmaVerdict::Counterexample)
        out.message = "found " + std::to_string(check.found) + " extra lattice points, need " +
                      std::to_string(check.required);
      break;
    }
    default: {
      IntPoint z1 = parity_midpoint(X);
      digest.add(z1);
      if (kind == LemmaKind::Midpoint)
        break;
      Split s1 = split_by_point(X, z1);
      digest.add(s1.below);
      digest.add(s1.above);
      if (kind == LemmaKind::Split1)
        break;
      std::vector<IntPoint> y = s1.below.size() > s1.above.size() ? s1.below : s1.above;
      y.push_back(z1);
      std::optional<IntPoint> z2;
      if (n >= 2 && y.size() >= base) {
        z2 = parity_midpoint(PointConfiguration(n, y));
      } else if (n >= 2) {
        for (auto &p : some_extra_lattice_points(X, 2))
          if (p != z1) {
            z2 = p;
            break;
          }
      }
      if (!z2) {
        out.verdict = LemmaVerdict::Vacuous;
        break;
      }
      auto [a, b] = adjacent_lattice_pair(z1, *z2);
      digest.add(a);
      digest.add(b);
      Split s2 = split_by_two_points(X, a, b);
      digest.add(s2.below);
      digest.add(s2.above);
      break;
    }
    }
  } catch (const PostconditionFailure &e) {
    out.verdict = LemmaVerdict::Counterexample;
    out.message = e.what();
  } catch (const std::logic_error &e) {
    out.verdict = LemmaVerdict::Counterexample;
    out.message = std::string("internal error: ") + e.what();
  }
  digest.add(static_cast<std::uint64_t>(out.verdict));
  out.digest = digest.value();
  return out;
}

} // namespace

CampaignReport run_campaign(LemmaKind kind, std::size_t n, std::size_t k, std::size_t trials,
                            std::uint64_t seed, unsigned threads) {
  if (n < 1 || n > 6)
    throw InvalidInput("campaign dimension must be between 1 and 6");
  if ((kind == LemmaKind::Main || kind == LemmaKind::Split2) && n < 2)
    throw InvalidInput("this lemma requires n >= 2");
  if (kind == LemmaKind::Main && k < 1)
    throw InvalidInput("the counting lemma requires k >= 1");
  std::vector<TrialOutcome> outcomes(trials);
  auto worker = [&](unsigned w, unsigned stride) {
    for (std::size_t i = w; i < trials; i += stride) {
      Rng rng(derive_seed(seed, i));
      outcomes[i] = run_trial(kind, n, k, rng);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(worker, w, threads);
    for (auto &t : pool)
      t.join();
  }
  CampaignReport report{.lemma = kind, .n = n, .k = k, .trials = trials, .seed = seed};
  Digest digest;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto &o = outcomes[i];
    digest.add(o.digest);
    switch (o.verdict) {
    case LemmaVerdict::Holds:
      ++report.holds;
      break;
    case LemmaVerdict::Vacuous:
      ++report.vacuous;
      break;
    case LemmaVerdict::Counterexample:
      report.counterexamples.push_back({i, o.message, o.configuration});
      break;
    }
  }
  report.digest = digest.value();
  return report;
}

CampaignReport exhaustive_small_grid() {
  std::vector<IntPoint> grid;
  for (std::int64_t x = 0; x <= 2; ++x)
    for (std::int64_t y = 0; y <= 2; ++y)
      grid.push_back({x, y});
  CampaignReport report{.lemma = LemmaKind::Main, .n = 2, .k = 1};
  Digest digest;
  for (unsigned mask = 0; mask < (1u << grid.size()); ++mask) {
    std::vector<IntPoint> pts;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask & (1u << i))
        pts.push_back(grid[i]);
    if (pts.size() < 5)
      continue;
    ++report.trials;
    PointConfiguration X(2, pts);
    auto check = check_main_lemma(X, 1);
    digest.add(mask);
    digest.add(static_cast<std::uint64_t>(check.verdict));
    if (check.verdict == LemmaVerdict::Holds)
      ++report.holds;
    else if (check.verdict == LemmaVerdict::Vacuous)
      ++report.vacuous;
    else
      report.counterexamples.push_back({mask, "too few extra lattice points", pts});
  }
  report.digest = digest.value();
  return report;
}

} // namespace helly
