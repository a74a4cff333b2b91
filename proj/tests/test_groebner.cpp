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

#include "seminorm/module_gb.hpp"
#include "seminorm/ring.hpp"

using namespace seminorm;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
auto QQ = FieldTag::rationals();

Polynomial pp(const std::string& s, const std::vector<std::string>& vars = kXY,
              FieldTag f = FieldTag::rationals()) {
    return parse_polynomial_text(s, f, vars);
}

// oracle: reduce a set of linear forms by Gaussian elimination on the
// coefficient matrix, entirely independent of the Buchberger path
std::vector<Polynomial> linear_row_reduce(std::vector<Polynomial> gens) {
    std::vector<std::vector<Scalar>> rows;
    std::size_t n = gens[0].nvars();
    auto field = gens[0].field();
    for (const auto& g : gens) {
        std::vector<Scalar> row(n, Scalar::zero(field));
        for (const auto& t : g.terms())
            for (std::size_t v = 0; v < n; ++v)
                if (t.mono.exp(v)) row[v] = t.coeff;
        rows.push_back(row);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = rows[rank][col].inverse();
        for (auto& c : rows[rank]) c = c * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Scalar f0 = rows[r][col];
            for (std::size_t v = 0; v < n; ++v) rows[r][v] = rows[r][v] - f0 * rows[rank][v];
        }
        ++rank;
    }
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < rank; ++r) {
        std::vector<Term> ts;
        for (std::size_t v = 0; v < n; ++v)
            if (!rows[r][v].is_zero()) ts.push_back({rows[r][v], Monomial::variable(n, v)});
        out.push_back(Polynomial::from_terms(field, n, ts));
    }
    return out;
}
}  // namespace

TEST_CASE("buchberger on a principal ideal") {
    auto gb = buchberger({pp("y^2 - x^3")}, MonomialOrder::grevlex());
    REQUIRE(gb.elems.size() == 1);
    CHECK(gb.elems[0] == pp("x^3 - y^2"));  // monic in grevlex
}

TEST_CASE("buchberger linear case against the row-reduction oracle") {
    std::vector<Polynomial> gens = {pp("x + y"), pp("x - y")};
    auto gb = buchberger(gens, MonomialOrder::grevlex());
    auto oracle = linear_row_reduce(gens);
    // oracle says the span is <x, y>
    REQUIRE(oracle.size() == 2);
    REQUIRE(gb.elems.size() == 2);
    CHECK(gb.elems[0] == pp("y"));
    CHECK(gb.elems[1] == pp("x"));
}

TEST_CASE("buchberger lex example") {
    // {xy - 1, y^2 - 1} with lex x > y reduces to {x - y, y^2 - 1}: the
    // S-pair y*(xy-1) - x*(y^2-1) = x - y by hand, and both sets generate
    // the same ideal (verified by mutual membership below)
    std::vector<Polynomial> gens = {pp("x*y - 1"), pp("y^2 - 1")};
    auto gb = buchberger(gens, MonomialOrder::lex());
    REQUIRE(gb.elems.size() == 2);
    CHECK(gb.elems[0] == pp("y^2 - 1"));
    CHECK(gb.elems[1] == pp("x - y"));
    for (const auto& g : gens) CHECK(in_ideal(g, gb));
    auto gb2 = buchberger({pp("x - y"), pp("y^2 - 1")}, MonomialOrder::lex());
    for (const auto& g : gb.elems) CHECK(in_ideal(g, gb2));
}

TEST_CASE("normal form examples") {
    auto gb = buchberger({pp("y^2 - x^3")}, MonomialOrder::grevlex());
    Polynomial nf = normal_form(pp("y^2"), gb);
    CHECK(nf == pp("x^3"));
    // the difference is an exact multiple of the generator
    Polynomial diff = pp("y^2") - nf;
    CHECK(diff.try_exact_divide(pp("y^2 - x^3")).has_value());

    auto gbxy = buchberger({pp("x"), pp("y")}, MonomialOrder::grevlex());
    CHECK(normal_form(pp("x^3*y"), gbxy).is_zero());
    auto gbx = buchberger({pp("x")}, MonomialOrder::grevlex());
    CHECK(normal_form(pp("1"), gbx) == pp("1"));
}

TEST_CASE("empty input yields the empty basis") {
    auto gb = buchberger({}, MonomialOrder::grevlex());
    CHECK(gb.elems.empty());
    auto gb0 = buchberger({Polynomial::zero(QQ, 2)}, MonomialOrder::grevlex());
    CHECK(gb0.elems.empty());
}

TEST_CASE("elimination examples") {
    std::vector<std::string> txy = {"t", "x", "y"};
    auto f1 = pp("x - t^2", txy), f2 = pp("y - t^3", txy);
    auto elim = eliminate_first({f1, f2}, 1);
    REQUIRE(elim.size() == 1);
    // oracle: substitute x = t^2, y = t^3; the result must vanish and the
    // generator must have the expected degree
    Polynomial t = Polynomial::variable(QQ, 3, 0);
    Polynomial sub = elim[0].substitute({t, t.pow(2), t.pow(3)});
    CHECK(sub.is_zero());
    CHECK(elim[0].total_degree() == 3);
    CHECK(elim[0] == pp("x^3 - y^2", txy));

    // eliminating x from <x> leaves nothing
    auto e2 = eliminate_first({pp("x")}, 1);
    CHECK(e2.empty());

    // k = 0 is the identity (same ideal)
    auto e3 = eliminate_first({pp("x + y"), pp("x - y")}, 0);
    auto gb3 = buchberger({pp("x + y"), pp("x - y")}, MonomialOrder::grevlex());
    CHECK(e3 == gb3.elems);
}

TEST_CASE("every computed basis passes the S-pair audit") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens;
        unsigned count = 2 + rng() % 3;
        for (unsigned i = 0; i < count; ++i) {
            std::vector<Term> ts;
            unsigned terms = 1 + rng() % 3;
            for (unsigned t = 0; t < terms; ++t) {
                std::vector<std::uint32_t> e = {static_cast<std::uint32_t>(rng() % 4),
                                                static_cast<std::uint32_t>(rng() % 4)};
                long c = static_cast<long>(rng() % 9) - 4;
                if (!c) c = 1;
                ts.push_back({Scalar::from_int(QQ, c), Monomial(e)});
            }
            Polynomial g = Polynomial::from_terms(QQ, 2, ts);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto gb = buchberger(gens, MonomialOrder::grevlex());
        CHECK(spair_audit(gb));
        // membership: every input generator reduces to zero
        for (const auto& g : gens) CHECK(in_ideal(g, gb));
    }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
    std::vector<Polynomial> gens = {pp("x^2 + y"), pp("x*y - 1"), pp("y^3 - x")};
    auto gb1 = buchberger(gens, MonomialOrder::grevlex());
    std::vector<Polynomial> perm = {gens[2], gens[0], gens[1]};
    auto gb2 = buchberger(perm, MonomialOrder::grevlex());
    CHECK(gb1.elems == gb2.elems);
    std::vector<Polynomial> perm2 = {gens[1], gens[2], gens[0]};
    CHECK(buchberger(perm2, MonomialOrder::grevlex()).elems == gb1.elems);
}

TEST_CASE("membership matches exhaustive low-degree expansion") {
    // cross-check NF(f) == 0 against brute-force expansion f = sum(h_i g_i)
    // with deg(h_i) <= 1 over a small ideal
    std::vector<Polynomial> gens = {pp("x^2 - y"), pp("x*y - 1")};
    auto gb = buchberger(gens, MonomialOrder::grevlex());
    // candidate memberships of total degree <= 3
    std::vector<Polynomial> h_basis;
    for (std::uint32_t a = 0; a <= 1; ++a)
        for (std::uint32_t b = 0; b + a <= 1; ++b)
            h_basis.push_back(Polynomial::term(Scalar::one(QQ), Monomial({a, b})));
    // enumerate f = h1*g1 + h2*g2 with h from the degree<=1 span with small coeffs
    std::vector<long> coeffs = {-1, 0, 1};
    for (long c1 : coeffs)
        for (long c2 : coeffs)
            for (long c3 : coeffs)
                for (long c4 : coeffs) {
                    Polynomial h1 = Polynomial::constant(Scalar::from_int(QQ, c1), 2) +
                                    h_basis[1].times_scalar(Scalar::from_int(QQ, c2));
                    Polynomial h2 = Polynomial::constant(Scalar::from_int(QQ, c3), 2) +
                                    h_basis[2].times_scalar(Scalar::from_int(QQ, c4));
                    Polynomial f = h1 * gens[0] + h2 * gens[1];
                    CHECK(in_ideal(f, gb));
                }
    // and a known non-member
    CHECK_FALSE(in_ideal(pp("x"), gb));
    CHECK_FALSE(in_ideal(pp("1"), gb));
}

TEST_CASE("module kernel: Koszul relation") {
    auto P = make_affine_ring(QQ, kXY, {});
    auto x = RingElement::variable(P, 0), y = RingElement::variable(P, 1);
    auto mk = module_kernel(P, 1, {{x}, {y}});
    REQUIRE(mk.generators.size() == 1);
    // the generator is (y, -x) up to sign
    bool match = (mk.generators[0][0] == y && mk.generators[0][1] == -x) ||
                 (mk.generators[0][0] == -y && mk.generators[0][1] == x);
    CHECK(match);
    CHECK(mk.presentation.relations.empty());
    // verify by multiplication: x*g0 + y*g1 = 0
    CHECK((x * mk.generators[0][0] + y * mk.generators[0][1]).is_zero());
    // a random kernel element is in the span: (fy, -fx) for random f
    auto f = parse_element("x^2 - 3*y + 1", P);
    auto span = kernel_generators(P, 2, {{f * y, -(f * x)}}, mk.generators);
    // the tracked syzygy of [(fy,-fx)] against the Koszul generator must show
    // the vector is dependent: its kernel against target rels is everything,
    // i.e. 1 is among the coefficients
    bool contains_unit = false;
    for (const auto& v : span)
        if (v[0].is_constant() && !v[0].is_zero()) contains_unit = true;
    CHECK(contains_unit);
}

TEST_CASE("module kernel trivial cases") {
    auto P = make_affine_ring(QQ, kXY, {});
    auto one = RingElement::one(P);
    auto zero = RingElement::zero(P);
    // kernel of the identity map on R^2
    auto mk = module_kernel(P, 2, {{one, zero}, {zero, one}});
    CHECK(mk.generators.empty());
    // kernel of multiplication by x on a domain
    auto x = RingElement::variable(P, 0);
    auto mk2 = module_kernel(P, 1, {{x}});
    CHECK(mk2.generators.empty());
}
