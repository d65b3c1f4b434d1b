#include "helly/json_io.hpp"

#include <sstream>

namespace helly::io {

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError("malformed JSON at byte offset " + std::to_string(e.byte) + ": " +
                     e.what());
  }
}

[[noreturn]] void schema_error(const std::string &where, const std::string &what) {
  throw ParseError("invalid value at " + where + ": " + what);
}

const Json &field(const Json &obj, const char *key, const std::string &where) {
  if (!obj.is_object())
    schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end())
    schema_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_of(const Json &v, const std::string &where) {
  try {
    if (v.is_string())
      return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
      return parse_rational(v.dump());
  } catch (const InvalidInput &e) {
    schema_error(where, e.what());
  }
  schema_error(where, "expected a rational literal string");
}

Integer integer_of(const Json &v, const std::string &where) {
  try {
    if (v.is_string())
      return parse_integer(v.get<std::string>());
    if (v.is_number_integer())
      return parse_integer(v.dump());
  } catch (const InvalidInput &e) {
    schema_error(where, e.what());
  }
  schema_error(where, "expected an integer");
}

std::size_t dimension_of(const Json &v, const std::string &where) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() < 1 || v.get<std::uint64_t>() > 64)
    schema_error(where, "expected a dimension between 1 and 64");
  return v.get<std::size_t>();
}

std::vector<LinearInequality> rows_of(const Json &rows, std::size_t n, const std::string &where) {
  if (!rows.is_array())
    schema_error(where, "expected an array");
  std::vector<LinearInequality> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const Json &a = field(rows[i], "a", at);
    if (!a.is_array() || a.size() != n)
      schema_error(at + "/a", "expected an array of " + std::to_string(n) + " rationals");
    RatVector normal;
    for (std::size_t j = 0; j < n; ++j)
      normal.push_back(rational_of(a[j], at + "/a/" + std::to_string(j)));
    Rational b = rational_of(field(rows[i], "b", at), at + "/b");
    try {
      out.emplace_back(std::move(normal), std::move(b));
    } catch (const InvalidInput &e) {
      schema_error(at, e.what());
    }
  }
  return out;
}

Json rows_json(const std::vector<LinearInequality> &rows) {
  Json out = Json::array();
  for (const auto &r : rows) {
    Json a = Json::array();
    for (const auto &v : r.normal())
      a.push_back(to_string(v));
    out.push_back(Json{{"a", a}, {"b", to_string(r.rhs())}});
  }
  return out;
}

} // namespace

Polyhedron parse_polyhedron(std::string_view text) {
  Json doc = parse_document(text);
  const std::size_t n = dimension_of(field(doc, "n", ""), "/n");
  return Polyhedron(n, rows_of(field(doc, "inequalities", ""), n, "/inequalities"));
}

std::string emit_polyhedron(const Polyhedron &P) {
  std::ostringstream s;
  s << "{\"n\": " << P.dimension() << ", \"inequalities\": [";
  for (std::size_t i = 0; i < P.size(); ++i) {
    s << (i ? ", " : "") << "{\"a\": [";
    const auto &a = P[i].normal();
    for (std::size_t j = 0; j < a.size(); ++j)
      s << (j ? ", " : "") << '"' << to_string(a[j]) << '"';
    s << "], \"b\": \"" << to_string(P[i].rhs()) << "\"}";
  }
  s << "]}";
  return s.str();
}

Json polyhedron_json(const Polyhedron &P) {
  return Json{{"n", P.dimension()}, {"inequalities", rows_json(P.rows())}};
}

ILPInstance parse_ilp(std::string_view text) {
  Json doc = parse_document(text);
  const std::size_t n = dimension_of(field(doc, "n", ""), "/n");
  const Json &c = field(doc, "c", "");
  if (!c.is_array() || c.size() != n)
    schema_error("/c", "expected an array of " + std::to_string(n) + " integers");
  std::vector<Integer> objective;
  for (std::size_t j = 0; j < n; ++j)
    objective.push_back(integer_of(c[j], "/c/" + std::to_string(j)));
  const Json &u = field(doc, "u", "");
  if (!u.is_number_integer() || u.get<std::int64_t>() < 1)
    schema_error("/u", "expected a positive integer");
  return ILPInstance(n, rows_of(field(doc, "rows", ""), n, "/rows"), std::move(objective),
                     u.get<std::int64_t>());
}

Json ilp_json(const ILPInstance &inst) {
  Json c = Json::array();
  for (const auto &v : inst.objective())
    c.push_back(integer_json(v));
  return Json{{"n", inst.dimension()}, {"c", c}, {"u", inst.upper()},
              {"rows", rows_json(inst.rows())}};
}

std::vector<IntPoint> parse_points(std::string_view text) {
  Json doc = parse_document(text);
  if (!doc.is_array())
    schema_error("", "expected an array of points");
  std::vector<IntPoint> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string at = "/" + std::to_string(i);
    if (!doc[i].is_array())
      schema_error(at, "expected an array of integers");
    IntPoint p;
    for (std::size_t j = 0; j < doc[i].size(); ++j) {
      const Json &v = doc[i][j];
      if (!v.is_number_integer())
        schema_error(at + "/" + std::to_string(j), "expected a 64-bit integer");
      p.push_back(v.get<std::int64_t>());
    }
    out.push_back(std::move(p));
  }
  return out;
}

Json integer_json(const Integer &v) {
  if (fits_int64(v))
    return to_int64(v);
  return to_string(v);
}

Json point_json(const IntPoint &p) {
  Json out = Json::array();
  for (auto v : p)
    out.push_back(v);
  return out;
}

Json points_json(const std::vector<IntPoint> &pts) {
  Json out = Json::array();
  for (const auto &p : pts)
    out.push_back(point_json(p));
  return out;
}

Json to_json(const BoundReport &r) {
  Json out{{"n", r.n}, {"k", r.k}, {"upper", integer_json(r.upper)}};
  out["exact"] = r.exact_known ? integer_json(*r.exact_known) : Json(nullptr);
  out["tight"] = std::string(to_string(r.tight));
  return out;
}

Json to_json(const WitnessPolytope &W) {
  Json tags = Json::array();
  for (const auto &t : W.tags)
    tags.push_back(t.to_string());
  return Json{{"n", W.n}, {"polyhedron", polyhedron_json(W.poly)}, {"tags", tags}};
}

Json to_json(const VerificationReport &r) {
  Json facets = Json::array();
  for (const auto &f : r.facets)
    facets.push_back(Json{{"index", f.index},
                          {"tag", f.tag},
                          {"tight_points", points_json(f.tight_points)},
                          {"strictly_inside_others", f.strictly_inside_others},
                          {"matches_expected", f.matches_expected},
                          {"interior_after_removal", f.interior_after_removal},
                          {"interior_unbounded_after_removal",
                           f.interior_unbounded_after_removal}});
  return Json{{"interior_ok", r.interior_ok},
              {"facet_tight_ok", r.facet_tight_ok},
              {"removal_ok", r.removal_ok},
              {"interior_points", points_json(r.interior_points)},
              {"feasible_count", r.feasible_count},
              {"facets", facets}};
}

Json to_json(const EnumOutcome &r) {
  return std::visit(
      [](const auto &o) -> Json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, EnumExact>)
          return Json{{"kind", "exact"},
                      {"count", o.points.size()},
                      {"points", points_json(o.points.points())}};
        else if constexpr (std::is_same_v<T, EnumCapExceeded>)
          return Json{{"kind", "cap_exceeded"}, {"cap", o.cap}};
        else if constexpr (std::is_same_v<T, EnumUnboundedWithWitness>)
          return Json{{"kind", "unbounded_with_witness"},
                      {"point", point_json(o.point)},
                      {"ray", point_json(o.ray)}};
        else {
          Json out{{"kind", "unbounded_inconclusive"}};
          if (o.searched)
            out["searched"] = Json{{"lower", point_json(o.searched->lower)},
                                   {"upper", point_json(o.searched->upper)}};
          else
            out["searched"] = nullptr;
          return out;
        }
      },
      r);
}

Json to_json(const Verdict &v) {
  Json out{{"verdict", verdict_name(v)}};
  if (const auto *bad = std::get_if<VerdictInvalid>(&v)) {
    if (bad->extra_point)
      out["extra_point"] = point_json(*bad->extra_point);
    if (bad->missing_point)
      out["missing_point"] = point_json(*bad->missing_point);
    if (bad->ray)
      out["ray"] = point_json(*bad->ray);
  }
  return out;
}

Json to_json(const Certificate &c) {
  Json audit = Json::array();
  for (const auto &a : c.audit) {
    Json entry{{"rows", a.rows}, {"accepted", a.accepted}};
    entry.update(to_json(a.verdict));
    audit.push_back(std::move(entry));
  }
  Json out{{"subset", c.subset}, {"size", c.subset.size()}, {"k", c.k}};
  out.update(to_json(c.verdict));
  out["within_bound"] = c.within_bound;
  out["bound"] = integer_json(c.bound);
  out["points"] = points_json(c.points.points());
  out["checks"] = c.checks;
  out["pruned"] = c.pruned;
  out["inconclusive"] = c.inconclusive;
  out["audit"] = std::move(audit);
  return out;
}

Json to_json(const CampaignReport &r) {
  Json failures = Json::array();
  for (const auto &f : r.counterexamples)
    failures.push_back(Json{{"trial", f.trial},
                            {"message", f.message},
                            {"configuration", points_json(f.configuration)}});
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(r.digest));
  return Json{{"lemma", to_string(r.lemma)},
              {"n", r.n},
              {"k", r.k},
              {"trials", r.trials},
              {"seed", r.seed},
              {"holds", r.holds},
              {"vacuous", r.vacuous},
              {"counterexamples", r.counterexamples.size()},
              {"failures", failures},
              {"digest", digest}};
}

Json to_json(const BasisResult &r) {
  return Json{{"tuple", points_json(r.tuple)},
              {"basis", r.indices},
              {"basis_size", r.indices.size()},
              {"bound", integer_json(r.bound)},
              {"within_bound", Integer(static_cast<unsigned long>(r.indices.size())) <= r.bound},
              {"verified", r.verified},
              {"brute_force_path", r.brute_force_path},
              {"statistics",
               Json{{"iterations", r.stats.iterations},
                    {"reweightings", r.stats.reweightings},
                    {"l_best_calls", r.stats.tuple_calls},
                    {"cache_hits", r.stats.cache_hits},
                    {"ip_solves", r.stats.ip_solves},
                    {"lp_solves", r.stats.lp_solves},
                    {"nodes", r.stats.nodes}}}};
}

Json to_json(const AxiomReport &r) {
  return Json{{"trials", r.trials},
              {"consistency_failures", r.consistency_failures},
              {"locality_failures", r.locality_failures},
              {"extended_locality_failures", r.extended_locality_failures},
              {"rule_mismatches", r.rule_mismatches},
              {"degenerate_trials", r.degenerate_trials},
              {"l_best_calls", r.tuple_calls},
              {"ok", r.ok()}};
}

} // namespace helly::io
