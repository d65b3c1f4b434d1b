#include "helly/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "helly/bounds.hpp"
#include "helly/errors.hpp"
#include "helly/lp.hpp"

namespace helly {

std::string verdict_name(const Verdict &v) {
  if (std::holds_alternative<VerdictValid>(v))
    return "valid";
  if (std::holds_alternative<VerdictInvalid>(v))
    return "invalid";
  return "inconclusive_unbounded";
}

namespace {

void check_indices(const Polyhedron &P, std::span<const std::size_t> subset) {
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("certificate subset contains a repeated index");
  if (!sorted.empty() && sorted.back() >= P.size())
    throw InvalidInput("certificate index " + std::to_string(sorted.back()) + " out of range");
}

Verdict compare_bounded(const Polyhedron &sub, const LatticePointSet &expected) {
  auto found = first_integer_points(sub, expected.size() + 1);
  for (const auto &p : found)
    if (!expected.contains(p))
      return VerdictInvalid{p, std::nullopt, std::nullopt};
  if (found.size() < expected.size()) {
    for (const auto &p : expected)
      if (!std::binary_search(found.begin(), found.end(), p))
        return VerdictInvalid{std::nullopt, p, std::nullopt};
  }
  return VerdictValid{};
}

Verdict compare_unbounded(const Polyhedron &sub, const LatticePointSet &expected,
                          const RatVector &ray, const EnumOptions &options) {
  if (!expected.empty()) {
    for (const auto &p : expected)
      if (!sub.contains(p))
        return VerdictInvalid{std::nullopt, p, std::nullopt};
    // One integer point plus an integer recession ray gives infinitely many.
    IntPoint dir = primitive_integer_direction(ray);
    IntPoint q = expected[0];
    do {
      for (std::size_t i = 0; i < q.size(); ++i)
        q[i] += dir[i];
    } while (expected.contains(q));
    return VerdictInvalid{q, std::nullopt, dir};
  }
  auto outcome = enumerate(sub, options);
  if (auto *w = std::get_if<EnumUnboundedWithWitness>(&outcome))
    return VerdictInvalid{w->point, std::nullopt, w->ray};
  if (auto *ex = std::get_if<EnumExact>(&outcome); ex && ex->points.empty())
    return VerdictValid{};
  return VerdictInconclusive{};
}

LatticePointSet exact_points(const Polyhedron &P, const EnumOptions &options) {
  auto outcome = enumerate(P, options);
  auto *ex = std::get_if<EnumExact>(&outcome);
  if (!ex)
    throw PreconditionError("certificate search needs a polyhedron with an exact, finite "
                            "integer point set");
  return ex->points;
}

Certificate finish(const Polyhedron &P, Certificate c, const EnumOptions &options) {
  c.k = c.points.size();
  c.verdict = check_certificate(P, c.subset, c.points, options);
  c.bound = c_upper(static_cast<unsigned>(P.dimension()), c.k);
  c.within_bound = Integer(static_cast<unsigned long>(c.subset.size())) <= c.bound;
  return c;
}

} // namespace

Verdict check_certificate(const Polyhedron &P, std::span<const std::size_t> subset,
                          const LatticePointSet &expected, const EnumOptions &options) {
  check_indices(P, subset);
  // Rounding keeps the integer points and can expose empty unbounded strips.
  Polyhedron sub = P.subsystem(subset).integer_rounded();
  auto box = bounding_box(sub);
  if (std::holds_alternative<BoxInfeasible>(box) || std::holds_alternative<BoxNoIntegers>(box)) {
    if (expected.empty())
      return VerdictValid{};
    return VerdictInvalid{std::nullopt, expected[0], std::nullopt};
  }
  if (auto *u = std::get_if<BoxUnbounded>(&box))
    return compare_unbounded(sub, expected, u->ray, options);
  return compare_bounded(sub, expected);
}

Certificate greedy_certificate(const Polyhedron &P, const EnumOptions &options) {
  Certificate c;
  c.points = exact_points(P, options);
  for (std::size_t i = 0; i < P.size(); ++i)
    c.subset.push_back(i);
  for (std::size_t i = 0; i < P.size(); ++i) {
    std::vector<std::size_t> trial;
    for (auto j : c.subset)
      if (j != i)
        trial.push_back(j);
    Verdict v = check_certificate(P, trial, c.points, options);
    ++c.checks;
    bool accept = is_valid(v);
    if (std::holds_alternative<VerdictInconclusive>(v))
      ++c.inconclusive;
    c.audit.push_back({{i}, accept, v});
    if (accept)
      c.subset = std::move(trial);
  }
  return finish(P, std::move(c), options);
}

Certificate minimum_certificate(const Polyhedron &P, std::size_t size_limit,
                                const EnumOptions &options) {
  const std::size_t m = P.size();
  if (m > 24)
    throw PreconditionError("minimum_certificate is limited to 24 rows");
  Certificate c;
  c.points = exact_points(P, options);

  // Each entry is the set of rows violated by an extra integer point; every
  // certificate must contain one of them.
  std::vector<std::uint32_t> hitting;
  auto cut_mask = [&](const IntPoint &p) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (P[i].evaluate(p) == Side::Violated)
        mask |= std::uint32_t{1} << i;
    return mask;
  };

  const std::size_t top = std::min(size_limit, m);
  for (std::size_t size = 0; size <= top; ++size) {
    std::vector<std::size_t> comb(size);
    for (std::size_t i = 0; i < size; ++i)
      comb[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (auto i : comb)
        mask |= std::uint32_t{1} << i;
      bool prune = std::any_of(hitting.begin(), hitting.end(),
                               [&](std::uint32_t h) { return (h & mask) == 0; });
      if (prune) {
        ++c.pruned;
      } else {
        Verdict v = check_certificate(P, comb, c.points, options);
        ++c.checks;
        if (is_valid(v)) {
          c.audit.push_back({comb, true, v});
          c.subset = comb;
          return finish(P, std::move(c), options);
        }
        if (auto *inv = std::get_if<VerdictInvalid>(&v); inv && inv->extra_point) {
          auto h = cut_mask(*inv->extra_point);
          if (h == 0)
            throw PostconditionFailure("extra point satisfies every row of the original system");
          hitting.push_back(h);
        } else if (std::holds_alternative<VerdictInconclusive>(v)) {
          ++c.inconclusive;
        }
        c.audit.push_back({comb, false, std::move(v)});
      }
      // Next combination in lexicographic order.
      if (size == 0)
        break;
      std::size_t i = size;
      while (i > 0 && comb[i - 1] == m - size + i - 1)
        --i;
      if (i == 0)
        break;
      ++comb[i - 1];
      for (std::size_t j = i; j < size; ++j)
        comb[j] = comb[j - 1] + 1;
    }
  }
  throw SearchLimitExceeded("no certifying subset of size <= " + std::to_string(size_limit) +
                            " (" + std::to_string(c.inconclusive) +
                            " subsets were inconclusive)");
}

} // namespace helly
