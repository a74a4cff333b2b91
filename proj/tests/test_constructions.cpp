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

#include "seminorm/normalization.hpp"

using namespace seminorm;

namespace {
auto QQ = FieldTag::rationals();
const std::vector<std::string> kXY = {"x", "y"};
}  // namespace

TEST_CASE("ring product of two polynomial lines") {
    auto A = make_affine_ring(QQ, {"x"}, {});
    auto B = make_affine_ring(QQ, {"y"}, {});
    auto pr = ring_product({A, B});
    REQUIRE(pr.idempotents.size() == 2);
    auto e0 = pr.idempotents[0], e1 = pr.idempotents[1];
    // the invariants hold as identities in the quotient
    CHECK(e0 * e0 == e0);
    CHECK(e1 * e1 == e1);
    CHECK((e0 * e1).is_zero());
    CHECK((e0 + e1).is_one());
    // e_i kills the other factor's variables and fixes its own
    auto ximg = pr.var_images[0][0], yimg = pr.var_images[1][0];
    CHECK((e1 * ximg).is_zero());
    CHECK((e0 * yimg).is_zero());
    CHECK(e0 * ximg == ximg);
    CHECK(e1 * yimg == yimg);
}

TEST_CASE("single-factor product is the ring with e0 = 1") {
    auto A = make_affine_ring(QQ, {"x"}, {"x^2"});
    auto pr = ring_product({A});
    CHECK(pr.idempotents.size() == 1);
    CHECK(pr.idempotents[0].is_one());
    CHECK(pr.var_images[0][0].pow(2).is_zero());
}

TEST_CASE("QQ x QQ is the two-idempotent algebra") {
    auto Q0 = make_affine_ring(QQ, std::vector<std::string>{}, {});
    auto pr = ring_product({Q0, Q0});
    CHECK(krull_dimension(pr.product) == 0);
    // rank 2 over QQ via pushforward from the 0-variable ring
    RingMap from_base(Q0, pr.product, {});
    auto pf = pushforward(from_base);
    CHECK(pf.rank() == 2);
    CHECK_THROWS_AS(ring_product({}), ValueError);
    auto F5 = make_affine_ring(FieldTag::prime_field(5), {"x"}, {});
    CHECK_THROWS_AS(ring_product({Q0, F5}), ValueError);
}

TEST_CASE("factor relations with constant terms localize at the idempotent") {
    // QQ[u]/(u^2 - 1) x QQ: the relation u^2 - 1 must become e-local
    auto A = make_affine_ring(QQ, {"u"}, {"u^2 - 1"});
    auto B = make_affine_ring(QQ, std::vector<std::string>{}, {});
    auto pr = ring_product({A, B});
    auto u = pr.var_images[0][0];
    auto e0 = pr.idempotents[0];
    CHECK(u * u == e0);           // u^2 = e0, not 1
    CHECK((u * u - e0).is_zero());
    CHECK_FALSE(pr.product.is_zero_ring());
}

TEST_CASE("minimize_presentation substitutes linear variables away") {
    auto R = make_affine_ring(QQ, kXY, {"y - x^2"});
    auto m = minimize_presentation(R);
    CHECK(m.ring.nvars() == 1);
    CHECK(m.ring.is_polynomial_ring());
    CHECK(m.to_min.images()[1] == parse_element("x^2", m.ring));
    // already-minimal rings are unchanged
    auto cusp = make_affine_ring(QQ, kXY, {"y^2-x^3"});
    auto mc = minimize_presentation(cusp);
    CHECK(mc.ring == cusp);
    CHECK(mc.to_min == RingMap::identity(cusp));
}

TEST_CASE("minimize_presentation maps are mutually inverse") {
    const char* cases[][2] = {{"y - x^2", "x*y - x^3"}, {"x - y", "y^3 - y"}, {"y - x^2 - 1", "x^4"}};
    for (auto& [a, b] : cases) {
        auto R = make_affine_ring(QQ, kXY, {a, b});
        auto m = minimize_presentation(R);
        for (std::size_t i = 0; i < R.nvars(); ++i)
            CHECK(m.from_min(m.to_min.images()[i]) == RingElement::variable(R, i));
        for (std::size_t i = 0; i < m.ring.nvars(); ++i)
            CHECK(m.to_min(m.from_min.images()[i]) == RingElement::variable(m.ring, i));
    }
}

TEST_CASE("subalgebra presentation of the cusp inside QQ[t]") {
    auto T = make_affine_ring(QQ, {"t"}, {});
    auto sub = subalgebra_presentation(T, {parse_element("t^2", T), parse_element("t^3", T)});
    REQUIRE(sub.ring.nvars() == 2);
    // kernel is <T0^3 - T1^2> up to naming
    auto expected = ideal_from_texts(sub.ring, {"T0^3 - T1^2"});
    std::vector<RingElement> defining;
    for (const auto& g : sub.ring.groebner().elems) defining.push_back(RingElement(sub.ring, g));
    CHECK(ideals_equal(make_ideal(sub.ring, defining), expected));
    CHECK(sub.inclusion(sub.rep_of_input[0]) == parse_element("t^2", T));
}

TEST_CASE("subalgebra generated by all variables is the ring itself") {
    auto cusp = make_affine_ring(QQ, kXY, {"y^2-x^3"});
    auto sub = subalgebra_presentation(
        cusp, {RingElement::variable(cusp, 0), RingElement::variable(cusp, 1)});
    CHECK(sub.ring.nvars() == 2);
    CHECK(is_surjective(sub.inclusion));
    CHECK(is_zero_ideal(kernel(sub.inclusion)));
}

TEST_CASE("subalgebra of one transcendental element is a polynomial line") {
    auto T = make_affine_ring(QQ, {"t"}, {});
    auto sub = subalgebra_presentation(T, {parse_element("t^2", T)});
    CHECK(sub.ring.nvars() == 1);
    CHECK(sub.ring.is_polynomial_ring());
}

TEST_CASE("pullback of the cusp conductor square recovers the cusp") {
    auto cusp = make_affine_ring(QQ, kXY, {"y^2-x^3"});
    auto T = make_affine_ring(QQ, {"t"}, {});
    auto Cq = make_affine_ring(QQ, {"t"}, {"t^2"});
    auto Q0 = make_affine_ring(QQ, std::vector<std::string>{}, {});
    RingMap phi(T, Cq, {parse_element("t", Cq)});
    RingMap psi(Q0, Cq, {});
    RingMap alpha(cusp, T, {parse_element("t^2", T), parse_element("t^3", T)});
    RingMap beta(cusp, Q0, {RingElement::zero(Q0), RingElement::zero(Q0)});
    auto pb = pullback(phi, psi, alpha, beta);
    // C is isomorphic to the cusp: the base map is an isomorphism and the
    // minimized defining ideal matches <y^2 - x^3> after renaming
    CHECK(is_zero_ideal(kernel(pb.from_base)));
    CHECK(is_surjective(pb.from_base));
    auto mini = minimize_presentation(pb.ring);
    RingMap sigma = compose(mini.to_min, pb.from_base);
    REQUIRE(mini.ring.nvars() == 2);
    // sigma sends x, y to the two variables; transport the cusp ideal across
    CHECK(sigma.images()[0] == RingElement::variable(mini.ring, 0));
    CHECK(sigma.images()[1] == RingElement::variable(mini.ring, 1));
    auto transported = ideal_from_texts(mini.ring, {});
    std::vector<RingElement> defs;
    for (const auto& g : mini.ring.groebner().elems) defs.push_back(RingElement(mini.ring, g));
    // x -> T0, y -> T1: the cusp relation in the minimized variables
    Polynomial rel = parse_polynomial_text("y^2 - x^3", QQ, kXY);
    Polynomial moved = rel.substitute({sigma.images()[0].rep(), sigma.images()[1].rep()});
    CHECK(ideals_equal(make_ideal(mini.ring, defs),
                       make_ideal(mini.ring, {RingElement(mini.ring, moved)})));
    // projections agree after composing to C
    CHECK(compose(phi, pb.to_A) == compose(psi, pb.to_B));
}

TEST_CASE("pullback along the identity degenerates to B") {
    // A = C = QQ, B = QQ[u]/(u^2 - u), base = B itself
    auto Q0 = make_affine_ring(QQ, std::vector<std::string>{}, {});
    auto B = make_affine_ring(QQ, {"u"}, {"u^2 - u"});
    RingMap phi = RingMap::identity(Q0);
    RingMap psi(B, Q0, {RingElement::zero(Q0)});
    RingMap alpha = psi;               // base -> A through the evaluation
    RingMap beta = RingMap::identity(B);
    auto pb = pullback(phi, psi, alpha, beta);
    // the pullback of {A --id--> A <- B} is B itself
    CHECK(is_zero_ideal(kernel(pb.to_B)));
    CHECK(is_surjective(pb.to_B));
}

TEST_CASE("pullback glueing t=0 to t=1 gives the ring of the node") {
    // A = QQ[t], C = QQ x QQ by evaluation at 0 and 1, B = QQ diagonal.
    // The base is QQ[a,b]/(b^2 - a*b - a^3) via a = t^2 - t, b = t^3 - t^2
    // (hand derivation: with b = t*a, b^2 = t^2*a^2 = (a + t)a^2 = a^3 + ab).
    auto T = make_affine_ring(QQ, {"t"}, {});
    auto Q0 = make_affine_ring(QQ, std::vector<std::string>{}, {});
    auto base = make_affine_ring(QQ, {"a", "b"}, {"b^2 - a*b - a^3"});
    auto CC = ring_product({Q0, Q0}).product;  // QQ x QQ with idempotents
    // phi: evaluation (f(0), f(1)): t -> 0*e0 + 1*e1 = e1
    auto e1 = RingElement::variable(CC, 1);
    RingMap phi(T, CC, {e1});
    RingMap psi(Q0, CC, {});
    RingMap alpha(base, T, {parse_element("t^2 - t", T), parse_element("t^3 - t^2", T)});
    RingMap beta(base, Q0, {RingElement::zero(Q0), RingElement::zero(Q0)});
    auto pb = pullback(phi, psi, alpha, beta);
    // both generators satisfy the gluing f(0) = f(1)
    auto a_img = alpha.images()[0];
    CHECK(phi(a_img) == psi(RingElement::zero(Q0)));
    // the pullback is the base ring
    CHECK(is_zero_ideal(kernel(pb.from_base)));
    CHECK(is_surjective(pb.from_base));
    // and its normalization map has conductor <a, b> (the glued point)
    auto n = normalize_reduced(pb.ring);
    auto c = conductor(n);
    std::vector<RingElement> expect = {pb.from_base(parse_element("a", base)),
                                       pb.from_base(parse_element("b", base))};
    CHECK(ideals_equal(c, make_ideal(pb.ring, expect)));
}

TEST_CASE("pullback rejects a non-surjective phi") {
    auto T = make_affine_ring(QQ, {"t"}, {});
    auto P = make_affine_ring(QQ, kXY, {});
    RingMap phi(P, T, {parse_element("t^2", T), parse_element("t^3", T)});  // not onto
    RingMap psi(T, T, {parse_element("t", T)});
    RingMap alpha = RingMap::identity(P);
    RingMap beta(P, T, {parse_element("t^2", T), parse_element("t^3", T)});
    CHECK_THROWS_AS(pullback(phi, psi, alpha, beta), NotSurjective);
}
