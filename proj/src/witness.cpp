#include "helly/witness.hpp"

#include <algorithm>
#include <set>

#include "helly/errors.hpp"
#include "helly/lattice.hpp"

namespace helly {

namespace {

Rational inverse_power(unsigned base, unsigned exp) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), base, exp);
  return Rational(Integer(1), d);
}

} // namespace

std::string WitnessTag::to_string() const {
  std::string name;
  switch (kind) {
  case Kind::Type1:
    name = "type1";
    break;
  case Kind::Type2:
    name = "type2";
    break;
  case Kind::Type3:
    name = "type3";
    break;
  case Kind::Type4:
    name = "type4";
    break;
  }
  name += "(";
  for (std::size_t i = 0; i < set.size(); ++i)
    name += (i ? "," : "") + std::to_string(set[i]);
  return name + ")";
}

std::vector<std::vector<unsigned>> canonical_subsets(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned size = 2; size <= n; ++size) {
    // Lexicographic combinations of {1..n} of the given size.
    std::vector<unsigned> comb(size);
    for (unsigned i = 0; i < size; ++i)
      comb[i] = i + 1;
    while (true) {
      out.push_back(comb);
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && comb[i] == n - size + i + 1)
        --i;
      if (i < 0)
        break;
      ++comb[i];
      for (unsigned j = i + 1; j < size; ++j)
        comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

WitnessPolytope build_witness(unsigned n) {
  if (n < 2)
    throw InvalidInput("witness polytope requires n >= 2");
  std::vector<LinearInequality> rows;
  std::vector<WitnessTag> tags;

  std::vector<RatVector> type1;
  for (unsigned j = 1; j <= n; ++j) {
    RatVector a(n);
    for (unsigned i = 1; i <= n; ++i) {
      if (i < j)
        a[i - 1] = inverse_power(2, i);
      else if (i == j)
        a[i - 1] = 1;
      else
        a[i - 1] = inverse_power(2, i - 1);
    }
    type1.push_back(std::move(a));
  }
  for (unsigned j = 1; j <= n; ++j) {
    rows.emplace_back(type1[j - 1], Rational(1));
    tags.push_back({WitnessTag::Kind::Type1, {j}});
  }
  for (unsigned j = 1; j <= n; ++j) {
    rows.push_back(rows[j - 1].negated(Rational(1)));
    tags.push_back({WitnessTag::Kind::Type2, {j}});
  }

  const auto subsets = canonical_subsets(n);
  std::vector<RatVector> type3;
  for (const auto &N : subsets) {
    const unsigned size = static_cast<unsigned>(N.size());
    const Rational inside = inverse_power(size, 1);
    const Rational outside = inverse_power(size, n);
    RatVector a(n);
    for (unsigned i = 1; i <= n; ++i) {
      bool member = std::find(N.begin(), N.end(), i) != N.end();
      if (!member)
        a[i - 1] = -outside;
      else if (i == N.front())
        a[i - 1] = -inside;
      else
        a[i - 1] = inside;
    }
    type3.push_back(std::move(a));
  }
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    rows.emplace_back(type3[s], Rational(1));
    tags.push_back({WitnessTag::Kind::Type3, subsets[s]});
  }
  const std::size_t type3_start = 2 * n;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    rows.push_back(rows[type3_start + s].negated(Rational(1)));
    tags.push_back({WitnessTag::Kind::Type4, subsets[s]});
  }
  return WitnessPolytope{n, Polyhedron(n, std::move(rows)), std::move(tags)};
}

IntPoint WitnessPolytope::expected_tight_point(std::size_t i) const {
  const auto &tag = tags.at(i);
  IntPoint p(n, 0);
  switch (tag.kind) {
  case WitnessTag::Kind::Type1:
    p[tag.set[0] - 1] = 1;
    break;
  case WitnessTag::Kind::Type2:
    p[tag.set[0] - 1] = -1;
    break;
  case WitnessTag::Kind::Type3:
  case WitnessTag::Kind::Type4: {
    const std::int64_t s = tag.kind == WitnessTag::Kind::Type3 ? 1 : -1;
    for (auto j : tag.set)
      p[j - 1] = s;
    p[tag.set.front() - 1] = -s;
    break;
  }
  }
  return p;
}

Polyhedron WitnessPolytope::integer_scaled() const {
  std::vector<LinearInequality> rows;
  for (const auto &r : poly.rows())
    rows.push_back(r.integer_scaled());
  return Polyhedron(n, std::move(rows));
}

bool classify_feasible(const IntPoint &y) {
  std::int64_t lead = 0;
  for (auto v : y) {
    if (v < -1 || v > 1)
      throw InvalidInput("classify_feasible expects entries in {-1,0,1}");
    if (lead == 0) {
      lead = v;
      continue;
    }
    if (v == lead)
      return false;
  }
  return true;
}

bool norm_check(const WitnessPolytope &P) {
  IntegerBox box(IntPoint(P.n, -3), IntPoint(P.n, 3));
  bool ok = true;
  for_each_point(box, [&](const IntPoint &y) {
    if (!ok)
      return;
    bool large = std::any_of(y.begin(), y.end(), [](auto v) { return v <= -2 || v >= 2; });
    if (large && P.poly.contains(y))
      ok = false;
  });
  return ok;
}

VerificationReport verify(const WitnessPolytope &P) {
  VerificationReport report;
  const auto &poly = P.poly;

  auto interior = interior_integer_points(poly);
  if (auto *ex = std::get_if<EnumExact>(&interior)) {
    report.interior_points = ex->points.points();
    report.interior_ok = report.interior_points.size() == 1 &&
                         report.interior_points.front() == IntPoint(P.n, 0);
  }

  auto all = enumerate(poly);
  const auto *feasible = std::get_if<EnumExact>(&all);
  if (!feasible)
    throw SearchLimitExceeded("witness polytope enumeration did not terminate exactly");
  report.feasible_count = feasible->points.size();

  bool tight_ok = true;
  std::set<IntPoint> seen;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    FacetDiagnostic diag;
    diag.index = i;
    diag.tag = P.tags[i].to_string();
    for (const auto &p : feasible->points)
      if (poly[i].evaluate(p) == Side::Tight)
        diag.tight_points.push_back(p);
    if (diag.tight_points.size() == 1) {
      const auto &p = diag.tight_points.front();
      diag.strictly_inside_others = true;
      for (std::size_t j = 0; j < poly.size(); ++j)
        if (j != i && poly[j].evaluate(p) != Side::StrictlySatisfied)
          diag.strictly_inside_others = false;
      diag.matches_expected = p == P.expected_tight_point(i);
      report.tight_point_per_facet[i] = p;
      if (!seen.insert(p).second)
        tight_ok = false;
    }
    tight_ok = tight_ok && diag.tight_points.size() == 1 && diag.strictly_inside_others &&
               diag.matches_expected;
    report.facets.push_back(std::move(diag));
  }
  report.facet_tight_ok = tight_ok;

  bool removal_ok = true;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto res = interior_integer_points(poly.without(i));
    auto &diag = report.facets[i];
    if (auto *ex = std::get_if<EnumExact>(&res))
      diag.interior_after_removal = ex->points.size();
    else if (std::holds_alternative<EnumUnboundedWithWitness>(res))
      diag.interior_unbounded_after_removal = true;
    removal_ok = removal_ok &&
                 (diag.interior_unbounded_after_removal || diag.interior_after_removal >= 2);
  }
  report.removal_ok = removal_ok;
  return report;
}

} // namespace helly
