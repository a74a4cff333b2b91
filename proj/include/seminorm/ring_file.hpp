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

#ifndef SEMINORM_RING_FILE_HPP
#define SEMINORM_RING_FILE_HPP

#include <fstream>
#include <sstream>

#include "ring.hpp"

namespace seminorm {

// Line-oriented ring description:
//
//   # comment
//   field QQ            (or: field GF(7), field ZZ/7)
//   vars x, y, z
//   ideal y^2 - x^3; x*y
//   ideal x^2           (ideal lines accumulate)
//
struct RingFile {
    FieldTag field;
    std::vector<std::string> vars;
    std::vector<std::string> relation_texts;

    AffineRing to_ring(const ComputeLimits& limits = global_limits()) const {
        return make_affine_ring(field, vars, relation_texts, limits);
    }
};

namespace ringfiledetail {

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace ringfiledetail

inline RingFile parse_ring_file_text(const std::string& text) {
    using ringfiledetail::strip;
    RingFile out;
    bool have_field = false, have_vars = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
        line = strip(line);
        if (line.empty()) continue;

        auto space = line.find_first_of(" \t");
        std::string keyword = space == std::string::npos ? line : line.substr(0, space);
        std::string rest = space == std::string::npos ? "" : strip(line.substr(space));

        if (keyword == "field") {
            if (have_field) throw ParseError("duplicate field declaration", lineno, 1);
            if (rest == "QQ") {
                out.field = FieldTag::rationals();
            } else if (rest.rfind("GF(", 0) == 0 && rest.back() == ')') {
                std::string num = rest.substr(3, rest.size() - 4);
                try {
                    out.field = FieldTag::prime_field(static_cast<std::uint32_t>(std::stoul(num)));
                } catch (const ValueError& e) {
                    throw ParseError(e.what(), lineno, 1);
                } catch (const std::exception&) {
                    throw ParseError("malformed GF(p) modulus", lineno, 1);
                }
            } else if (rest.rfind("ZZ/", 0) == 0) {
                try {
                    out.field = FieldTag::prime_field(static_cast<std::uint32_t>(std::stoul(rest.substr(3))));
                } catch (const ValueError& e) {
                    throw ParseError(e.what(), lineno, 1);
                } catch (const std::exception&) {
                    throw ParseError("malformed ZZ/p modulus", lineno, 1);
                }
            } else {
                throw ParseError("unknown field '" + rest + "' (use QQ, GF(p), or ZZ/p)", lineno, 1);
            }
            have_field = true;
        } else if (keyword == "vars") {
            if (have_vars) throw ParseError("duplicate vars declaration", lineno, 1);
            std::istringstream vs(rest);
            std::string name;
            while (std::getline(vs, name, ',')) {
                name = strip(name);
                if (!is_valid_identifier(name))
                    throw ParseError("invalid variable name '" + name + "'", lineno, 1);
                out.vars.push_back(name);
            }
            if (out.vars.empty()) throw ParseError("empty vars declaration", lineno, 1);
            have_vars = true;
        } else if (keyword == "ideal") {
            std::istringstream ps(rest);
            std::string poly;
            while (std::getline(ps, poly, ';')) {
                poly = strip(poly);
                if (!poly.empty()) out.relation_texts.push_back(poly);
            }
        } else {
            throw ParseError("unknown directive '" + keyword + "'", lineno, 1);
        }
    }
    if (!have_field) throw ParseError("missing field declaration", lineno, 1);
    if (!have_vars && !out.relation_texts.empty())
        throw ParseError("ideal lines without a vars declaration", lineno, 1);

    // validate the polynomials against the declared variables now
    for (const auto& t : out.relation_texts) parse_polynomial_text(t, out.field, out.vars);
    return out;
}

inline RingFile parse_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_ring_file_text(buf.str());
}

}  // namespace seminorm

#endif
