#include "helly/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "helly/errors.hpp"
#include "helly/lp.hpp"

namespace helly {

LatticePointSet::LatticePointSet(std::vector<IntPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticePointSet::contains(const IntPoint &p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

namespace {

using lp::InequalitySystem;

// Fixes the first variable to v. Rows whose remaining normal vanishes are
// checked and dropped; nullopt if one of them fails.
std::optional<InequalitySystem> substitute_first(const InequalitySystem &sys, std::int64_t v) {
  InequalitySystem out;
  out.n = sys.n - 1;
  Rational value = to_rational(v);
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    const auto &row = sys.a[r];
    Rational rhs = sys.b[r];
    if (sgn(row[0]) != 0 && v != 0)
      rhs -= row[0] * value;
    bool zero = true;
    for (std::size_t i = 1; i < row.size() && zero; ++i)
      zero = sgn(row[i]) == 0;
    if (zero) {
      if (sgn(rhs) < 0)
        return std::nullopt;
      continue;
    }
    out.add(RatVector(row.begin() + 1, row.end()), std::move(rhs));
  }
  return out;
}

class Brancher {
public:
  Brancher(std::uint64_t limit, bool stop_at_first) : limit_(limit), stop_(stop_at_first) {}

  // False when the point limit was exceeded.
  bool run(const InequalitySystem &sys, std::optional<std::pair<std::int64_t, std::int64_t>> first) {
    IntPoint prefix;
    visit(sys, prefix, first);
    return !exceeded_;
  }

  std::vector<IntPoint> &points() { return points_; }

private:
  bool done() const { return exceeded_ || (stop_ && !points_.empty()); }

  std::optional<std::pair<std::int64_t, std::int64_t>> range_of_first(const InequalitySystem &sys) {
    if (sys.n == 1) {
      std::optional<Integer> lo, hi;
      for (std::size_t r = 0; r < sys.rows(); ++r) {
        const Rational &a = sys.a[r][0];
        Rational bound = sys.b[r] / a;
        if (sgn(a) > 0) {
          Integer f = floor(bound);
          if (!hi || f < *hi)
            hi = f;
        } else {
          Integer c = ceil(bound);
          if (!lo || c > *lo)
            lo = c;
        }
      }
      if (!lo || !hi)
        throw std::logic_error("enumeration reached an unbounded coordinate");
      if (*lo > *hi)
        return std::nullopt;
      return std::pair{to_int64(*lo), to_int64(*hi)};
    }
    RatVector e(sys.n, Rational(0));
    e[0] = 1;
    auto low = lp::solve(sys, e, Sense::Minimize);
    if (std::holds_alternative<LPInfeasible>(low))
      return std::nullopt;
    if (!std::holds_alternative<LPOptimal>(low))
      throw std::logic_error("enumeration reached an unbounded coordinate");
    auto high = lp::solve(sys, e, Sense::Maximize);
    if (!std::holds_alternative<LPOptimal>(high))
      throw std::logic_error("enumeration reached an unbounded coordinate");
    Integer lo = ceil(std::get<LPOptimal>(low).value);
    Integer hi = floor(std::get<LPOptimal>(high).value);
    if (lo > hi)
      return std::nullopt;
    return std::pair{to_int64(lo), to_int64(hi)};
  }

  void visit(const InequalitySystem &sys, IntPoint &prefix,
             std::optional<std::pair<std::int64_t, std::int64_t>> given) {
    if (sys.n == 0) {
      if (points_.size() >= limit_) {
        exceeded_ = true;
        return;
      }
      points_.push_back(prefix);
      return;
    }
    auto range = given ? given : range_of_first(sys);
    if (!range)
      return;
    for (std::int64_t v = range->first; v <= range->second && !done(); ++v) {
      auto sub = substitute_first(sys, v);
      if (!sub)
        continue;
      prefix.push_back(v);
      visit(*sub, prefix, std::nullopt);
      prefix.pop_back();
    }
  }

  std::uint64_t limit_;
  bool stop_;
  bool exceeded_ = false;
  std::vector<IntPoint> points_;
};

lp::InequalitySystem boxed_system(const Polyhedron &P, const IntegerBox &box) {
  auto sys = lp::system_of(P);
  const std::size_t n = P.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    RatVector up(n, Rational(0)), down(n, Rational(0));
    up[i] = 1;
    down[i] = -1;
    sys.add(std::move(up), to_rational(box.upper[i]));
    sys.add(std::move(down), to_rational(-box.lower[i]));
  }
  return sys;
}

EnumOutcome search_unbounded(const Polyhedron &P, const EnumOptions &options) {
  const std::size_t n = P.dimension();
  auto sys = lp::system_of(P);
  auto anchor_point = lp::feasible_point(sys);
  if (!anchor_point)
    return EnumExact{};
  std::vector<std::optional<Integer>> lo(n), hi(n);
  std::optional<RatVector> ray;
  bool empty_range = false;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    auto low = lp::solve(sys, e, Sense::Minimize);
    if (auto *opt = std::get_if<LPOptimal>(&low))
      lo[i] = ceil(opt->value);
    else if (auto *u = std::get_if<LPUnbounded>(&low); u && !ray)
      ray = u->ray;
    auto high = lp::solve(sys, e, Sense::Maximize);
    if (auto *opt = std::get_if<LPOptimal>(&high))
      hi[i] = floor(opt->value);
    else if (auto *u = std::get_if<LPUnbounded>(&high); u && !ray)
      ray = u->ray;
    if (lo[i] && hi[i] && *lo[i] > *hi[i])
      empty_range = true;
  }
  if (!ray)
    throw std::logic_error("search_unbounded called on a bounded polyhedron");
  if (empty_range)
    return EnumUnboundedInconclusive{};

  Integer extent = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] && hi[i] && *hi[i] - *lo[i] > extent)
      extent = *hi[i] - *lo[i];
  Integer margin = extent * options.margin_factor;
  if (margin < options.min_margin)
    margin = options.min_margin;

  IntPoint lower(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer anchor = floor((*anchor_point)[i]);
    Integer l = lo[i] ? *lo[i] : Integer(anchor - margin);
    Integer h = hi[i] ? *hi[i] : Integer(anchor + margin);
    if (l > h)
      return EnumUnboundedInconclusive{};
    lower[i] = to_int64(l);
    upper[i] = to_int64(h);
  }
  IntegerBox box(std::move(lower), std::move(upper));
  if (auto p = find_integer_point(P, box))
    return EnumUnboundedWithWitness{std::move(*p), primitive_integer_direction(*ray)};
  return EnumUnboundedInconclusive{std::move(box)};
}

} // namespace

IntPoint primitive_integer_direction(const RatVector &ray) {
  Integer scale = 1;
  for (const auto &v : ray)
    scale = lcm(scale, v.get_den());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto &v : ray) {
    Rational s = v * scale;
    ints.push_back(s.get_num());
    g = gcd(g, s.get_num());
  }
  if (g == 0)
    throw InvalidInput("zero direction has no primitive integer form");
  IntPoint out;
  for (auto &v : ints)
    out.push_back(to_int64(Integer(v / g)));
  return out;
}

std::optional<IntPoint> find_integer_point(const Polyhedron &P, const IntegerBox &box) {
  if (box.dimension() != P.dimension())
    throw InvalidInput("search box dimension mismatch");
  Brancher b(1, /*stop_at_first=*/true);
  b.run(boxed_system(P, box), std::nullopt);
  if (b.points().empty())
    return std::nullopt;
  return b.points().front();
}

EnumOutcome enumerate(const Polyhedron &P, const EnumOptions &options) {
  if (options.cap == 0)
    throw InvalidInput("enumeration cap must be at least 1");
  auto box = bounding_box(P);
  if (std::holds_alternative<BoxInfeasible>(box) || std::holds_alternative<BoxNoIntegers>(box))
    return EnumExact{};
  if (std::holds_alternative<BoxUnbounded>(box))
    return search_unbounded(P, options);
  const auto &ib = std::get<IntegerBox>(box);
  Brancher b(options.cap, /*stop_at_first=*/false);
  if (!b.run(lp::system_of(P), std::pair{ib.lower[0], ib.upper[0]}))
    return EnumCapExceeded{options.cap};
  return EnumExact{LatticePointSet(std::move(b.points()))};
}

EnumOutcome interior_integer_points(const Polyhedron &P, const EnumOptions &options) {
  return enumerate(P.integer_interior(), options);
}

CountOutcome count(const Polyhedron &P, const EnumOptions &options) {
  auto outcome = enumerate(P, options);
  return std::visit(
      [](auto &&o) -> CountOutcome {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, EnumExact>)
          return CountExact{o.points.size()};
        else if constexpr (std::is_same_v<T, EnumCapExceeded>)
          return CountMoreThan{o.cap};
        else if constexpr (std::is_same_v<T, EnumUnboundedWithWitness>)
          return CountInfiniteWitnessed{o.point, o.ray};
        else
          return CountInconclusive{};
      },
      outcome);
}

} // namespace helly

namespace helly {

std::vector<IntPoint> first_integer_points(const Polyhedron &P, std::uint64_t limit) {
  auto box = bounding_box(P);
  if (std::holds_alternative<BoxUnbounded>(box))
    throw PreconditionError("first_integer_points requires a bounded polyhedron");
  const auto *ib = std::get_if<IntegerBox>(&box);
  if (!ib || limit == 0)
    return {};
  Brancher b(limit, /*stop_at_first=*/false);
  b.run(lp::system_of(P), std::pair{ib->lower[0], ib->upper[0]});
  return std::move(b.points());
}

} // namespace helly
