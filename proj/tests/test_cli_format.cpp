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

#include <catch_amalgamated.hpp>

#include "seminorm/json_io.hpp"
#include "seminorm/ring_file.hpp"

using namespace seminorm;

TEST_CASE("ring files parse") {
    auto rf = parse_ring_file_text(
        "# the cusp\n"
        "field QQ\n"
        "vars x, y\n"
        "ideal y^2 - x^3\n");
    CHECK(rf.field.is_rationals());
    CHECK(rf.vars == std::vector<std::string>{"x", "y"});
    REQUIRE(rf.relation_texts.size() == 1);
    auto R = rf.to_ring();
    CHECK(R.to_string() == "QQ[x, y]/(x^3 - y^2)");
}

TEST_CASE("ZZ/p is accepted as an alias for GF(p)") {
    auto rf = parse_ring_file_text("field ZZ/11\nvars x, y, u, v, e, f\n");
    CHECK(rf.field == FieldTag::prime_field(11));
    auto rf2 = parse_ring_file_text("field GF(7)\nvars t\n");
    CHECK(rf2.field == FieldTag::prime_field(7));
}

TEST_CASE("multiple ideal lines and semicolons accumulate") {
    auto rf = parse_ring_file_text(
        "field QQ\n"
        "vars x, y\n"
        "ideal x^2; x*y\n"
        "ideal y^3\n");
    CHECK(rf.relation_texts == std::vector<std::string>{"x^2", "x*y", "y^3"});
}

TEST_CASE("parse errors carry positions and reject bad input") {
    CHECK_THROWS_AS(parse_ring_file_text("field QQ\nvars x\nideal x + z\n"), ParseError);
    CHECK_THROWS_AS(parse_ring_file_text("vars x\n"), ParseError);               // missing field
    CHECK_THROWS_AS(parse_ring_file_text("field ZZ/4\nvars x\n"), ParseError);   // composite
    CHECK_THROWS_AS(parse_ring_file_text("field QQ\nvars x, 1y\n"), ParseError); // bad name
    CHECK_THROWS_AS(parse_ring_file_text("field QQ\nwibble x\n"), ParseError);
    try {
        parse_ring_file_text("field QQ\nvars x\nideal x + z\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    }
}

TEST_CASE("JSON ring payloads round-trip") {
    auto QQ = FieldTag::rationals();
    auto R = make_affine_ring(QQ, {"x", "y"}, {"y^2 - x^3", "x*y"});
    auto j = ring_to_json(R);
    auto back = ring_from_json(j);
    CHECK(back == R);

    auto F11 = FieldTag::prime_field(11);
    auto S = make_affine_ring(F11, {"u", "v"}, {"u^2 - v^3"});
    CHECK(ring_from_json(ring_to_json(S)) == S);

    // maps serialize with both endpoints and re-parseable images
    auto T = make_affine_ring(QQ, {"t"}, {});
    auto cusp = make_affine_ring(QQ, {"x", "y"}, {"y^2-x^3"});
    RingMap f(cusp, T, {parse_element("t^2", T), parse_element("t^3", T)});
    auto mj = map_to_json(f);
    CHECK(ring_from_json(mj["from"]) == cusp);
    CHECK(ring_from_json(mj["to"]) == T);
    CHECK(mj["images"][0].get<std::string>() == "t^2");
}
