#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "helly/bounds.hpp"
#include "helly/certificate.hpp"
#include "helly/errors.hpp"
#include "helly/lattice.hpp"
#include "helly/lbest.hpp"
#include "helly/lemma_lab.hpp"
#include "helly/witness.hpp"

namespace helly::io {

using Json = nlohmann::ordered_json;

/// Malformed document. The message names the byte offset for syntax errors
/// and the JSON pointer of the offending value for schema errors.
class ParseError : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// {"n": 2, "inequalities": [{"a": ["1", "1/2"], "b": "1"}]}
Polyhedron parse_polyhedron(std::string_view text);
/// Canonical text: lowest-terms rationals, ", " and ": " separators.
std::string emit_polyhedron(const Polyhedron &P);
Json polyhedron_json(const Polyhedron &P);

/// {"n": 2, "c": [1, 1], "u": 2, "rows": [{"a": ["-1", "-1"], "b": "-3"}]}
ILPInstance parse_ilp(std::string_view text);
Json ilp_json(const ILPInstance &inst);

/// [[0, 1], [2, 3]]
std::vector<IntPoint> parse_points(std::string_view text);

/// Number when it fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer &v);
Json point_json(const IntPoint &p);
Json points_json(const std::vector<IntPoint> &pts);

Json to_json(const BoundReport &r);
Json to_json(const WitnessPolytope &W);
Json to_json(const VerificationReport &r);
Json to_json(const EnumOutcome &r);
Json to_json(const Verdict &v);
Json to_json(const Certificate &c);
Json to_json(const CampaignReport &r);
Json to_json(const BasisResult &r);
Json to_json(const AxiomReport &r);

} // namespace helly::io
