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
#include <random>

#include "seminorm/ideal.hpp"

using namespace seminorm;

namespace {
auto QQ = FieldTag::rationals();
const std::vector<std::string> kXY = {"x", "y"};
}  // namespace

TEST_CASE("intersection examples") {
    auto P = make_affine_ring(QQ, kXY, {});
    // oracle for monomial ideals: pairwise lcm rule
    auto I = ideal_from_texts(P, {"x"});
    auto J = ideal_from_texts(P, {"y"});
    auto K = intersect(I, J);
    CHECK(ideals_equal(K, ideal_from_texts(P, {"x*y"})));

    auto I2 = ideal_from_texts(P, {"x^2", "y"});
    auto J2 = ideal_from_texts(P, {"x", "y^3"});
    // lcm rule: <x^2, x*y^3, x*y, y^3> = <x^2, x*y, y^3>
    CHECK(ideals_equal(intersect(I2, J2), ideal_from_texts(P, {"x^2", "x*y", "y^3"})));

    // I ∩ <1> = I
    CHECK(ideals_equal(intersect(I2, unit_ideal(P)), I2));

    // the Greco-Traverso intersection (over GF(11)) has the session shape
    auto F11 = FieldTag::prime_field(11);
    auto B = make_affine_ring(F11, {"x", "y", "u", "v", "e", "f"}, {});
    auto gt = intersect(ideal_from_texts(B, {"u", "v", "e-1", "f"}),
                        ideal_from_texts(B, {"x", "y", "e", "f-1"}));
    // spot membership both ways
    CHECK(ideal_contains(gt, parse_element("u*x", B)));
    CHECK(ideal_contains(gt, parse_element("e^2 - e", B)));
    CHECK(ideal_contains(gt, parse_element("e + f - 1", B)));
    CHECK_FALSE(ideal_contains(gt, parse_element("u", B)));
    CHECK_FALSE(ideal_contains(gt, parse_element("e", B)));
}

TEST_CASE("quotient examples") {
    auto P = make_affine_ring(QQ, kXY, {});
    auto Q1 = quotient(ideal_from_texts(P, {"x*y"}), ideal_from_texts(P, {"x"}));
    CHECK(ideals_equal(Q1, ideal_from_texts(P, {"y"})));
    // oracle: y*x in <xy> and minimality: 1 not in the quotient
    CHECK(ideal_contains(ideal_from_texts(P, {"x*y"}), parse_element("y*x", P)));
    CHECK_FALSE(is_unit_ideal(Q1));

    auto I = ideal_from_texts(P, {"x^2", "x*y"});
    CHECK(ideals_equal(quotient(I, unit_ideal(P)), I));

    auto Q2 = quotient(ideal_from_texts(P, {"x^2*y"}), ideal_from_texts(P, {"x^2"}));
    CHECK(ideals_equal(Q2, ideal_from_texts(P, {"y"})));

    // (I : 0) is the whole ring by convention
    CHECK(is_unit_ideal(quotient(I, zero_ideal(P))));
}

TEST_CASE("saturation examples") {
    auto P = make_affine_ring(QQ, kXY, {});
    auto x = parse_element("x", P);
    CHECK(ideals_equal(saturate(ideal_from_texts(P, {"x^2*y"}), x), ideal_from_texts(P, {"y"})));
    CHECK(is_unit_ideal(saturate(ideal_from_texts(P, {"x"}), x)));
    // a prime not containing x is already saturated
    auto cuspI = ideal_from_texts(P, {"y^2-x^3"});
    CHECK(ideals_equal(saturate(cuspI, x), cuspI));
    CHECK_THROWS_AS(saturate(cuspI, RingElement::zero(P)), ValueError);
}

TEST_CASE("saturation is idempotent") {
    auto P = make_affine_ring(QQ, kXY, {});
    std::mt19937_64 rng(5150);
    auto x = parse_element("x", P);
    for (int i = 0; i < 10; ++i) {
        std::vector<std::string> gens;
        const char* pool[] = {"x^2*y", "x*y^2", "x^3", "y^3 - x", "x^2 - y", "x*y - y"};
        for (int k = 0; k < 2; ++k) gens.push_back(pool[rng() % 6]);
        auto I = ideal_from_texts(P, gens);
        auto S1 = saturate(I, x);
        CHECK(ideals_equal(saturate(S1, x), S1));
    }
}

TEST_CASE("quotient times divisor is contained in the ideal") {
    auto P = make_affine_ring(QQ, kXY, {});
    std::mt19937_64 rng(31337);
    const char* pool[] = {"x^2", "x*y", "y^2", "x^3 - y", "x + y^2", "y^4"};
    for (int i = 0; i < 20; ++i) {
        auto I = ideal_from_texts(P, {pool[rng() % 6], pool[rng() % 6]});
        auto J = ideal_from_texts(P, {pool[rng() % 6]});
        auto Q = quotient(I, J);
        IdealHandle prod = ideal_product(Q, J);
        for (const auto& g : prod.gens) CHECK(ideal_contains(I, g));
    }
}

TEST_CASE("intersection is contained in both sides") {
    auto P = make_affine_ring(QQ, kXY, {});
    std::mt19937_64 rng(8888);
    const char* pool[] = {"x^2", "x*y", "y^2 - x", "x^3", "y^3", "x - y"};
    for (int i = 0; i < 20; ++i) {
        auto I = ideal_from_texts(P, {pool[rng() % 6], pool[rng() % 6]});
        auto J = ideal_from_texts(P, {pool[rng() % 6]});
        auto K = intersect(I, J);
        for (const auto& g : K.gens) {
            CHECK(ideal_contains(I, g));
            CHECK(ideal_contains(J, g));
        }
    }
}

TEST_CASE("krull dimension examples") {
    auto cusp = make_affine_ring(QQ, kXY, {"y^2-x^3"});
    CHECK(krull_dimension(cusp) == 1);
    auto P = make_affine_ring(QQ, kXY, {});
    CHECK(krull_dimension(P) == 2);
    auto field = make_affine_ring(QQ, {}, {});
    CHECK(krull_dimension(field) == 0);
    auto zero = make_affine_ring(QQ, {"x"}, {"1"});
    CHECK(krull_dimension(zero) == -1);
}

TEST_CASE("krull dimension agrees with the brute-force oracle on monomial ideals") {
    // oracle: for a monomial ideal, iterate over all variable subsets S and
    // take the largest with no generator supported inside S
    const std::size_t n = 4;
    std::vector<Monomial> monos;  // all monomials of degree 1..3 in 4 vars
    for (std::uint32_t a = 0; a <= 3; ++a)
        for (std::uint32_t b = 0; a + b <= 3; ++b)
            for (std::uint32_t c = 0; a + b + c <= 3; ++c)
                for (std::uint32_t d = 0; a + b + c + d <= 3; ++d) {
                    if (a + b + c + d == 0) continue;
                    monos.push_back(Monomial({a, b, c, d}));
                }
    auto oracle = [&](const std::vector<Monomial>& gens) {
        int best = 0;
        for (unsigned mask = 0; mask < 16; ++mask) {
            bool independent = true;
            for (const auto& m : gens) {
                bool inside = true;
                for (std::size_t v = 0; v < n; ++v)
                    if (m.exp(v) && !(mask & (1u << v))) inside = false;
                if (inside) {
                    independent = false;
                    break;
                }
            }
            if (independent) best = std::max(best, __builtin_popcount(mask));
        }
        return best;
    };
    auto R = make_affine_ring(QQ, {"a", "b", "c", "d"}, {});
    std::mt19937_64 rng(2024);
    // exhaustive on pairs plus random triples
    for (std::size_t i = 0; i < monos.size(); i += 3) {
        for (std::size_t j = i; j < monos.size(); j += 5) {
            std::vector<RingElement> gens = {
                RingElement(R, Polynomial::term(Scalar::one(QQ), monos[i])),
                RingElement(R, Polynomial::term(Scalar::one(QQ), monos[j]))};
            CHECK(ideal_dimension(make_ideal(R, gens)) == oracle({monos[i], monos[j]}));
        }
    }
    for (int t = 0; t < 200; ++t) {
        std::vector<Monomial> pick = {monos[rng() % monos.size()], monos[rng() % monos.size()],
                                      monos[rng() % monos.size()]};
        std::vector<RingElement> gens;
        for (const auto& m : pick) gens.push_back(RingElement(R, Polynomial::term(Scalar::one(QQ), m)));
        CHECK(ideal_dimension(make_ideal(R, gens)) == oracle(pick));
    }
}

TEST_CASE("trim examples") {
    auto P = make_affine_ring(QQ, kXY, {});
    auto T1 = trim(ideal_from_texts(P, {"x", "x^2"}));
    REQUIRE(T1.gens.size() == 1);
    CHECK(T1.gens[0] == parse_element("x", P));
    CHECK(trim(zero_ideal(P)).gens.empty());
    // deterministic in the input order: the first spanning prefix survives
    auto T2 = trim(ideal_from_texts(P, {"x + y", "x", "y"}));
    CHECK(T2.gens.size() == 2);
    CHECK(T2.gens[0] == parse_element("x + y", P));
}

TEST_CASE("ideal equality examples") {
    auto P = make_affine_ring(QQ, kXY, {});
    CHECK(ideals_equal(ideal_from_texts(P, {"x", "y"}), ideal_from_texts(P, {"y", "x"})));
    CHECK_FALSE(ideals_equal(ideal_from_texts(P, {"x"}), ideal_from_texts(P, {"x^2"})));
    CHECK(ideals_equal(ideal_from_texts(P, {"x+y", "x-y"}), ideal_from_texts(P, {"x", "y"})));
}

TEST_CASE("radical membership examples") {
    auto P = make_affine_ring(QQ, kXY, {});
    CHECK(radical_membership(parse_element("x", P), ideal_from_texts(P, {"x^2"})));
    CHECK_FALSE(radical_membership(parse_element("y", P), ideal_from_texts(P, {"x^2"})));
    CHECK(radical_membership(parse_element("x+y", P), ideal_from_texts(P, {"(x+y)^3"})));
}

TEST_CASE("quotient ring ideals carry the defining ideal") {
    auto cusp = make_affine_ring(QQ, kXY, {"y^2-x^3"});
    // y^2 = x^3 in the cusp, so <x> contains y^2
    auto I = ideal_from_texts(cusp, {"x"});
    CHECK(radical_membership(parse_element("y", cusp), I));
    CHECK(ideal_contains(I, parse_element("y^2", cusp)));
}
