#include "helly/lbest.hpp"

#include <algorithm>
#include <set>

#include "helly/bounds.hpp"
#include "helly/errors.hpp"
#include "helly/lp.hpp"

namespace helly {

Integer TieBreakObjective::value(const IntPoint &x) const {
  if (x.size() != cbar.size())
    throw InvalidInput("tie-break objective: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += cbar[i] * to_integer(x[i]);
  return s;
}

RatVector TieBreakObjective::as_rational() const {
  RatVector out;
  out.reserve(cbar.size());
  for (const auto &v : cbar)
    out.emplace_back(v);
  return out;
}

namespace {

IntegerBox unit_box(std::size_t n, std::int64_t u) {
  return IntegerBox(IntPoint(n, 0), IntPoint(n, u));
}

} // namespace

bool TieBreakObjective::injective_on_box(std::int64_t u, std::uint64_t limit) const {
  auto box = unit_box(cbar.size(), u);
  if (box.volume(limit + 1) > limit)
    throw InvalidInput("box too large for the exhaustive injectivity check");
  std::vector<Integer> values;
  for_each_point(box, [&](const IntPoint &p) { values.push_back(value(p)); });
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

TieBreakObjective tie_break(const std::vector<Integer> &c, std::int64_t u) {
  if (u < 1)
    throw InvalidInput("tie_break requires u >= 1");
  if (c.empty())
    throw InvalidInput("tie_break requires a nonempty objective");
  const std::size_t n = c.size();
  const Integer base = to_integer(u);
  Integer top;
  mpz_pow_ui(top.get_mpz_t(), base.get_mpz_t(), n);
  TieBreakObjective out;
  out.cbar.resize(n);
  Integer power = 1; // u^(n-i) for i = n, n-1, ...
  for (std::size_t i = n; i-- > 0;) {
    out.cbar[i] = top * c[i] + power;
    power *= base;
  }
  return out;
}

bool respects_objective(const TieBreakObjective &cbar, const std::vector<Integer> &c,
                        std::int64_t u) {
  std::vector<std::pair<Integer, Integer>> keyed;
  for_each_point(unit_box(c.size(), u), [&](const IntPoint &p) {
    Integer cv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      cv += c[i] * to_integer(p[i]);
    keyed.emplace_back(cbar.value(p), cv);
  });
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].second < keyed[i - 1].second)
      return false;
  return true;
}

ILPInstance::ILPInstance(std::size_t n, std::vector<LinearInequality> rows,
                         std::vector<Integer> c, std::int64_t u)
    : n_(n), c_(std::move(c)), u_(u) {
  if (n_ == 0)
    throw InvalidInput("ILP dimension must be at least 1");
  if (u_ < 1)
    throw InvalidInput("ILP upper bound u must be at least 1");
  if (c_.size() != n_)
    throw InvalidInput("ILP objective has the wrong length");
  rows_.reserve(rows.size());
  for (const auto &r : rows) {
    if (r.dimension() != n_)
      throw InvalidInput("ILP row has the wrong length");
    rows_.push_back(r.integer_scaled());
  }
  cbar_ = tie_break(c_, u_);
  if (!cbar_.injective_on_box(u_))
    throw InvalidInput("tie-break objective is not injective on the box; the l best points "
                       "are not well defined");
}

IntegerBox ILPInstance::box() const { return unit_box(n_, u_); }

namespace {

class BranchAndBound {
public:
  BranchAndBound(const std::vector<LinearInequality> &rows,
                 const std::vector<LinearInequality> &cuts, const TieBreakObjective &cbar,
                 SolveStats &stats)
      : cbar_(cbar), objective_(cbar.as_rational()), stats_(stats) {
    n_ = cbar.cbar.size();
    base_.n = n_;
    for (const auto *group : {&rows, &cuts})
      for (const auto &r : *group) {
        if (r.dimension() != n_)
          throw InvalidInput("solve_small_ip: row dimension mismatch");
        base_.add(r.normal(), r.rhs());
      }
  }

  std::optional<IntPoint> run(const IntegerBox &box) {
    node(box.lower, box.upper);
    return best_;
  }

private:
  void node(const IntPoint &lo, const IntPoint &hi) {
    ++stats_.nodes;
    lp::InequalitySystem sys = base_;
    for (std::size_t i = 0; i < n_; ++i) {
      RatVector e(n_, Rational(0));
      e[i] = 1;
      sys.add(e, to_rational(hi[i]));
      e[i] = -1;
      sys.add(e, -to_rational(lo[i]));
    }
    ++stats_.lp_solves;
    auto result = lp::solve(sys, objective_, Sense::Minimize);
    const auto *opt = std::get_if<LPOptimal>(&result);
    if (!opt)
      return;
    if (best_ && ceil(opt->value) >= best_value_)
      return;
    std::optional<std::size_t> branch;
    Rational best_frac = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      Rational f = opt->point[i] - Rational(floor(opt->point[i]));
      if (f == 0)
        continue;
      Rational g = Rational(1) - f;
      Rational dist = f < g ? f : g;
      if (dist > best_frac) {
        best_frac = dist;
        branch = i;
      }
    }
    if (!branch) {
      IntPoint x(n_);
      for (std::size_t i = 0; i < n_; ++i)
        x[i] = to_int64(opt->point[i].get_num());
      Integer v = cbar_.value(x);
      if (!best_ || v < best_value_) {
        best_ = std::move(x);
        best_value_ = v;
      }
      return;
    }
    const std::size_t j = *branch;
    const std::int64_t f = to_int64(floor(opt->point[j]));
    if (f >= lo[j]) {
      IntPoint h = hi;
      h[j] = f;
      node(lo, h);
    }
    if (f + 1 <= hi[j]) {
      IntPoint l = lo;
      l[j] = f + 1;
      node(l, hi);
    }
  }

  const TieBreakObjective &cbar_;
  RatVector objective_;
  SolveStats &stats_;
  std::size_t n_ = 0;
  lp::InequalitySystem base_;
  std::optional<IntPoint> best_;
  Integer best_value_;
};

} // namespace

std::optional<IntPoint> solve_small_ip(const std::vector<LinearInequality> &rows,
                                       const TieBreakObjective &cbar,
                                       const std::vector<LinearInequality> &cuts,
                                       const IntegerBox &box, SolveStats *stats) {
  if (box.dimension() != cbar.cbar.size())
    throw InvalidInput("solve_small_ip: box dimension mismatch");
  SolveStats local;
  SolveStats &s = stats ? *stats : local;
  ++s.ip_solves;
  return BranchAndBound(rows, cuts, cbar, s).run(box);
}

namespace {

std::vector<LinearInequality> select_rows(const ILPInstance &inst,
                                          std::span<const std::size_t> G) {
  std::vector<LinearInequality> rows;
  rows.reserve(G.size());
  for (auto i : G) {
    if (i >= inst.size())
      throw InvalidInput("constraint index " + std::to_string(i) + " out of range");
    rows.push_back(inst.rows()[i]);
  }
  return rows;
}

} // namespace

std::vector<IntPoint> l_best(const ILPInstance &inst, std::span<const std::size_t> G,
                             std::size_t l, SolveStats *stats) {
  if (l < 1)
    throw InvalidInput("l must be at least 1");
  const auto rows = select_rows(inst, G);
  const auto &cbar = inst.tie_breaker();
  RatVector negated;
  for (const auto &v : cbar.cbar)
    negated.emplace_back(-v);
  std::vector<IntPoint> out;
  std::vector<LinearInequality> cuts;
  while (out.size() < l) {
    auto x = solve_small_ip(rows, cbar, cuts, inst.box(), stats);
    if (!x)
      break;
    // cbar.x >= cbar.x_prev + 1; only the latest cut binds.
    cuts.assign(1, LinearInequality(negated, Rational(-(cbar.value(*x) + 1))));
    out.push_back(std::move(*x));
  }
  return out;
}

std::vector<IntPoint> l_best_brute_force(const ILPInstance &inst,
                                         std::span<const std::size_t> G, std::size_t l) {
  if (l < 1)
    throw InvalidInput("l must be at least 1");
  const auto rows = select_rows(inst, G);
  std::vector<std::pair<Integer, IntPoint>> feasible;
  for_each_point(inst.box(), [&](const IntPoint &p) {
    for (const auto &r : rows)
      if (r.evaluate(p) == Side::Violated)
        return;
    feasible.emplace_back(inst.tie_breaker().value(p), p);
  });
  std::sort(feasible.begin(), feasible.end());
  std::vector<IntPoint> out;
  for (std::size_t i = 0; i < feasible.size() && i < l; ++i)
    out.push_back(feasible[i].second);
  return out;
}

LBestOracle::LBestOracle(const ILPInstance &inst, std::size_t l) : inst_(&inst), l_(l) {
  if (l < 1)
    throw InvalidInput("l must be at least 1");
}

const std::vector<IntPoint> &LBestOracle::tuple(std::span<const std::size_t> G) {
  ++calls_;
  std::vector<std::size_t> key(G.begin(), G.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  auto it = cache_.find(key);
  if (it != cache_.end()) {
    ++hits_;
    return it->second;
  }
  auto value = l_best(*inst_, key, l_, &stats_);
  return cache_.emplace(std::move(key), std::move(value)).first->second;
}

bool LBestOracle::violates(std::span<const std::size_t> G, std::size_t h, ViolatorRule rule) {
  if (h >= inst_->size())
    throw InvalidInput("constraint index out of range");
  if (std::find(G.begin(), G.end(), h) != G.end())
    throw PreconditionError("violates requires h outside G");
  const auto &base = tuple(G);
  if (rule == ViolatorRule::Degenerate && base.size() < l_)
    return false;
  std::vector<std::size_t> grown(G.begin(), G.end());
  grown.push_back(h);
  return tuple(grown) != base;
}

std::vector<std::size_t> LBestOracle::violators(std::span<const std::size_t> G,
                                                ViolatorRule rule) {
  const auto &base = tuple(G);
  std::vector<std::size_t> out;
  if (rule == ViolatorRule::Degenerate && base.size() < l_)
    return out;
  std::vector<bool> member(inst_->size(), false);
  for (auto i : G)
    member.at(i) = true;
  for (std::size_t h = 0; h < inst_->size(); ++h) {
    if (member[h])
      continue;
    const auto &row = inst_->rows()[h];
    for (const auto &p : base)
      if (row.evaluate(p) == Side::Violated) {
        out.push_back(h);
        break;
      }
  }
  return out;
}

namespace {

std::vector<std::size_t> basis_by_deletion(LBestOracle &oracle, std::vector<std::size_t> S) {
  std::sort(S.begin(), S.end());
  const auto target = oracle.tuple(S);
  std::vector<std::size_t> B = S;
  for (auto i : S) {
    std::vector<std::size_t> trial;
    trial.reserve(B.size());
    for (auto j : B)
      if (j != i)
        trial.push_back(j);
    if (oracle.tuple(trial) == target)
      B = std::move(trial);
  }
  return B;
}

void finish(BasisResult &out, LBestOracle &oracle, const ILPInstance &inst, std::size_t l) {
  out.tuple = oracle.tuple(out.indices);
  out.bound = c_upper(static_cast<unsigned>(inst.dimension()), l);
  out.stats.tuple_calls = oracle.tuple_calls();
  out.stats.cache_hits = oracle.cache_hits();
  out.stats.ip_solves = oracle.solve_stats().ip_solves;
  out.stats.lp_solves = oracle.solve_stats().lp_solves;
  out.stats.nodes = oracle.solve_stats().nodes;
  std::vector<std::size_t> all(inst.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  out.verified = l_best(inst, all, l) == out.tuple;
}

std::uint64_t checked_delta(const ILPInstance &inst, std::size_t l) {
  Integer delta = c_upper(static_cast<unsigned>(inst.dimension()), l);
  if (!delta.fits_ulong_p() || delta > 1'000'000)
    throw InvalidInput("combinatorial dimension bound too large");
  return delta.get_ui();
}

} // namespace

BasisResult brute_force_basis(const ILPInstance &inst, std::size_t l) {
  LBestOracle oracle(inst, l);
  std::vector<std::size_t> all(inst.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  BasisResult out;
  out.brute_force_path = true;
  out.indices = basis_by_deletion(oracle, all);
  finish(out, oracle, inst, l);
  return out;
}

BasisResult clarkson_basis(const ILPInstance &inst, std::size_t l,
                           const ClarksonOptions &options) {
  const std::uint64_t delta = checked_delta(inst, l);
  const std::size_t m = inst.size();
  if (m <= options.brute_force_factor * delta * delta)
    return brute_force_basis(inst, l);

  LBestOracle oracle(inst, l);
  Rng rng(options.seed);
  BasisResult out;
  std::vector<Integer> weight(m, Integer(1));
  const std::uint64_t draws = options.sample_factor * delta * delta;
  for (;;) {
    if (out.stats.iterations >= options.max_iterations)
      throw SearchLimitExceeded("clarkson_basis: iteration limit reached");
    ++out.stats.iterations;
    Integer total = 0;
    for (const auto &w : weight)
      total += w;
    std::vector<std::size_t> sample;
    sample.reserve(draws);
    for (std::uint64_t d = 0; d < draws; ++d) {
      Integer t = rng.uniform_below(total);
      std::size_t i = 0;
      while (t >= weight[i]) {
        t -= weight[i];
        ++i;
      }
      sample.push_back(i);
    }
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    auto B = basis_by_deletion(oracle, sample);
    auto V = oracle.violators(B, ViolatorRule::Extended);
    if (V.empty()) {
      out.indices = std::move(B);
      break;
    }
    Integer heavy = 0;
    for (auto h : V)
      heavy += weight[h];
    if (heavy * static_cast<unsigned long>(options.violator_factor * delta) <= total) {
      ++out.stats.reweightings;
      for (auto h : V)
        weight[h] *= 2;
    }
  }
  finish(out, oracle, inst, l);
  return out;
}

AxiomReport violator_axiom_check(const ILPInstance &inst, std::size_t l, std::size_t trials,
                                 std::uint64_t seed) {
  const std::size_t m = inst.size();
  if (m > 12)
    throw PreconditionError("violator_axiom_check requires at most 12 rows");
  LBestOracle oracle(inst, l);
  Rng rng(seed);
  AxiomReport report;
  report.trials = trials;

  auto literal = [&](const std::vector<std::size_t> &G, ViolatorRule rule) {
    std::vector<bool> member(m, false);
    for (auto i : G)
      member[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < m; ++h)
      if (!member[h] && oracle.violates(G, h, rule))
        out.push_back(h);
    return out;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::size_t> F;
    for (std::size_t i = 0; i < m; ++i)
      if (rng.coin())
        F.push_back(i);
    if (oracle.tuple(F).size() < l)
      ++report.degenerate_trials;
    for (auto rule : {ViolatorRule::Degenerate, ViolatorRule::Extended}) {
      auto VF = literal(F, rule);
      if (VF != oracle.violators(F, rule))
        ++report.rule_mismatches;
      std::vector<std::size_t> G = F;
      for (std::size_t i = 0; i < m; ++i) {
        bool in_f = std::binary_search(F.begin(), F.end(), i);
        bool in_v = std::binary_search(VF.begin(), VF.end(), i);
        if (!in_f && !in_v && rng.coin())
          G.push_back(i);
      }
      std::sort(G.begin(), G.end());
      auto VG = literal(G, rule);
      for (auto h : VG)
        if (std::binary_search(G.begin(), G.end(), h))
          ++report.consistency_failures;
      if (VG != VF) {
        if (rule == ViolatorRule::Degenerate)
          ++report.locality_failures;
        else
          ++report.extended_locality_failures;
      }
    }
  }
  report.tuple_calls = oracle.tuple_calls();
  return report;
}

ILPInstance random_instance(std::size_t n, std::size_t m, std::int64_t u, Rng &rng) {
  if (n == 0 || u < 1)
    throw InvalidInput("random_instance needs n >= 1 and u >= 1");
  std::vector<LinearInequality> rows;
  while (rows.size() < m) {
    RatVector a(n);
    bool nonzero = false;
    for (auto &v : a) {
      v = to_rational(rng.uniform(-3, 3));
      nonzero = nonzero || v != 0;
    }
    if (!nonzero)
      continue;
    IntPoint p(n);
    for (auto &v : p)
      v = rng.uniform(0, u);
    rows.emplace_back(a, dot(a, p) + to_rational(rng.uniform(0, 2)));
  }
  for (std::int64_t range = 3;; ++range)
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::vector<Integer> c(n);
      for (auto &v : c)
        v = to_integer(rng.uniform(-range, range));
      if (tie_break(c, u).injective_on_box(u))
        return ILPInstance(n, rows, std::move(c), u);
    }
}

} // namespace helly
