#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dempoly/demchar.hpp"
#include "dempoly/ideal.hpp"
#include "dempoly/polytope.hpp"

// Wire formats: root labels "a[i,j]" / "a[i,-j]", weights "m1,m2,...,mn",
// and the JSON/CSV shapes of the external interfaces.

namespace dempoly {

using json = nlohmann::json;

std::string weight_to_string(const Weight& m);
Weight parse_weight(const std::string& s, int rank);

std::vector<std::string> order_labels(const RootPoset& poset);

json roots_json(const LieType& t);
json poset_json(const System& sys);
json word_json(const ReflectionWord& w);
json path_json(const PathSpec& p, const System& sys);
json paths_json(const System& sys);
json inequalities_json(const System& sys);
json point_set_json(const System& sys, const Weight& lambda,
                    const std::vector<MultiExponent>& points);
std::string point_set_csv(const System& sys, const std::vector<MultiExponent>& points);
json character_json(const ReflectionWord& word, const Weight& lambda, const CharacterPoly& c);
json generators_json(const System& sys, const Weight& lambda, const GeneratorSet& gs);

// Round-trip: points re-read from point-set JSON (labels checked against the
// system's chain order).
std::vector<MultiExponent> parse_point_set_json(const json& j, const System& sys);

}  // namespace dempoly
