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

#include "seminorm/factor.hpp"
#include "seminorm/parser.hpp"

using namespace seminorm;

namespace {
auto QQ = FieldTag::rationals();
const std::vector<std::string> kXY = {"x", "y"};

Polynomial expand(const Factorization& F, std::size_t nvars) {
    Polynomial acc = Polynomial::constant(F.unit, nvars);
    for (const auto& [p, m] : F.factors) acc *= p.pow(m);
    return acc;
}

bool has_factor(const Factorization& F, const Polynomial& p, unsigned mult) {
    for (const auto& [q, m] : F.factors)
        if (q == p.monic() && m == mult) return true;
    return false;
}
}  // namespace

TEST_CASE("factor xy(x^2 - y^2) over QQ") {
    auto f = parse_polynomial_text("x*y*(x^2-y^2)", QQ, kXY);
    auto F = factor(f);
    REQUIRE(F.factors.size() == 4);
    CHECK(has_factor(F, parse_polynomial_text("x", QQ, kXY), 1));
    CHECK(has_factor(F, parse_polynomial_text("y", QQ, kXY), 1));
    CHECK(has_factor(F, parse_polynomial_text("x - y", QQ, kXY), 1));
    CHECK(has_factor(F, parse_polynomial_text("x + y", QQ, kXY), 1));
    CHECK(expand(F, 2) == f);  // oracle: expand the product and compare
}

TEST_CASE("x^2 + 1 is irreducible over QQ but a square over GF(2)") {
    auto f = parse_polynomial_text("x^2+1", QQ, kXY);
    auto F = factor(f);
    REQUIRE(F.factors.size() == 1);
    CHECK(F.factors[0].second == 1);
    CHECK(F.factors[0].first == f);

    auto F2 = FieldTag::prime_field(2);
    auto g = parse_polynomial_text("x^2+1", F2, kXY);
    auto G = factor(g);
    REQUIRE(G.factors.size() == 1);
    CHECK(G.factors[0].second == 2);
    CHECK(G.factors[0].first == parse_polynomial_text("x+1", F2, kXY));
}

TEST_CASE("units are tracked exactly") {
    auto f = parse_polynomial_text("12*x^2 - 3", QQ, kXY);
    auto F = factor(f);
    CHECK(F.unit == Scalar::from_int(QQ, 12));
    CHECK(expand(F, 2) == f);
}

TEST_CASE("re-expansion equals the input on random products") {
    std::mt19937_64 rng(1001);
    const char* pool[] = {"x", "y", "x + 1", "x - y", "x + y", "x^2 + 1", "y^2 - 2", "x^2 + y^2 + 1"};
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = Polynomial::one(QQ, 2);
        unsigned parts = 1 + rng() % 3;
        for (unsigned i = 0; i < parts; ++i) {
            unsigned mult = 1 + rng() % 2;
            f *= parse_polynomial_text(pool[rng() % 8], QQ, kXY).pow(mult);
        }
        if (f.total_degree() > 10) continue;
        auto F = factor(f, trial);
        CHECK(expand(F, 2) == f);
    }
    auto F5 = FieldTag::prime_field(5);
    const char* pool5[] = {"x", "x + 1", "x + y", "x^2 + 2", "y^2 + x", "x*y + 1"};
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = Polynomial::one(F5, 2);
        unsigned parts = 1 + rng() % 3;
        for (unsigned i = 0; i < parts; ++i)
            f *= parse_polynomial_text(pool5[rng() % 6], F5, kXY).pow(1 + rng() % 2);
        if (f.total_degree() > 10) continue;
        auto F = factor(f, trial);
        CHECK(expand(F, 2) == f);
    }
}

TEST_CASE("univariate Zassenhaus handles repeated and mixed factors") {
    auto f = parse_polynomial_text("(x^2+1)*(x^2-2)*(x-3)^2", QQ, kXY);
    auto F = factor(f);
    REQUIRE(F.factors.size() == 3);
    CHECK(has_factor(F, parse_polynomial_text("x - 3", QQ, kXY), 2));
    CHECK(has_factor(F, parse_polynomial_text("x^2 + 1", QQ, kXY), 1));
    CHECK(has_factor(F, parse_polynomial_text("x^2 - 2", QQ, kXY), 1));
}

TEST_CASE("Cantor-Zassenhaus over GF(p)") {
    auto F7 = FieldTag::prime_field(7);
    // x^7 - x splits into all linear factors over GF(7)
    auto f = parse_polynomial_text("x^7 - x", F7, kXY);
    auto F = factor(f);
    CHECK(F.factors.size() == 7);
    for (const auto& [p, m] : F.factors) {
        CHECK(p.total_degree() == 1);
        CHECK(m == 1);
    }
    CHECK(expand(F, 2) == f);

    auto F2 = FieldTag::prime_field(2);
    auto g = parse_polynomial_text("x^6 + x + 1", F2, kXY);
    auto G = factor(g);
    CHECK(expand(G, 2) == g);
}

TEST_CASE("characteristic-p squarefree decomposition sees p-th powers") {
    auto F3 = FieldTag::prime_field(3);
    auto f = parse_polynomial_text("(x+1)^3", F3, kXY);  // derivative vanishes
    auto F = factor(f);
    REQUIRE(F.factors.size() == 1);
    CHECK(F.factors[0].second == 3);
    CHECK(F.factors[0].first == parse_polynomial_text("x+1", F3, kXY));
}

TEST_CASE("trivariate irreducible in characteristic 2") {
    auto F2 = FieldTag::prime_field(2);
    std::vector<std::string> txy = {"t", "x", "y"};
    auto f = parse_polynomial_text("x^2 - t*y^2", F2, txy);
    auto F = factor(f);
    REQUIRE(F.factors.size() == 1);
    CHECK(F.factors[0].second == 1);
}

TEST_CASE("degree guard raises UnsupportedDegree") {
    ComputeLimits tight;
    tight.max_factor_degree = 3;
    auto f = parse_polynomial_text("(x^2 + y^2 + 1)*(x + y + 1)*(x - y)", QQ, kXY);
    CHECK_THROWS_AS(factor(f, 0, tight), UnsupportedDegree);
    CHECK_THROWS_AS(factor(Polynomial::zero(QQ, 2)), ValueError);
}

TEST_CASE("monomial content is extracted") {
    auto f = parse_polynomial_text("x^3*y^2 - x^2*y^3", QQ, kXY);
    auto F = factor(f);
    CHECK(has_factor(F, parse_polynomial_text("x", QQ, kXY), 2));
    CHECK(has_factor(F, parse_polynomial_text("y", QQ, kXY), 2));
    CHECK(has_factor(F, parse_polynomial_text("x - y", QQ, kXY), 1));
    CHECK(expand(F, 2) == f);
}
