/*
   Copyright 2026 The seminorm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEMINORM_JSON_IO_HPP
#define SEMINORM_JSON_IO_HPP

#include <json.hpp>

#include "ideal.hpp"
#include "ringmap.hpp"

namespace seminorm {

using json = nlohmann::ordered_json;

// {"field": "QQ", "vars": [...], "relations": [...]} -- relations are the
// reduced basis, so the object is canonical and re-parses to the same ring.
inline json ring_to_json(const AffineRing& R) {
    json j;
    j["field"] = R.field().to_string();
    j["vars"] = R.vars();
    json rels = json::array();
    for (const auto& g : R.groebner().elems) rels.push_back(g.to_string(R.vars()));
    j["relations"] = rels;
    return j;
}

inline json map_to_json(const RingMap& f) {
    json j;
    j["from"] = ring_to_json(f.source());
    j["to"] = ring_to_json(f.target());
    json imgs = json::array();
    for (const auto& im : f.images()) imgs.push_back(im.to_string());
    j["images"] = imgs;
    return j;
}

inline json ideal_to_json(const IdealHandle& I) {
    json j = json::array();
    for (const auto& g : I.gens) j.push_back(g.to_string());
    return j;
}

// round-trip support: rebuild a ring from its JSON form
inline AffineRing ring_from_json(const json& j, const ComputeLimits& limits = global_limits()) {
    std::string fs = j.at("field").get<std::string>();
    FieldTag field;
    if (fs == "QQ") {
        field = FieldTag::rationals();
    } else if (fs.rfind("GF(", 0) == 0 && fs.back() == ')') {
        field = FieldTag::prime_field(static_cast<std::uint32_t>(std::stoul(fs.substr(3, fs.size() - 4))));
    } else {
        throw ParseError("unknown field in JSON: " + fs);
    }
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::string> rels = j.at("relations").get<std::vector<std::string>>();
    return make_affine_ring(field, vars, rels, limits);
}

}  // namespace seminorm

#endif
