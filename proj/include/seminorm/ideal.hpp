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

#ifndef SEMINORM_IDEAL_HPP
#define SEMINORM_IDEAL_HPP

#include <vector>

#include "ring.hpp"

namespace seminorm {

// Move a polynomial to a different variable context: variable i becomes
// variable to[i].  Distinct targets required; every used variable must map.
inline Polynomial remap_variables(const Polynomial& p, const std::vector<std::size_t>& to,
                                  std::size_t new_nvars) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> e(new_nvars, 0);
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            std::uint32_t x = t.mono.exp(i);
            if (!x) continue;
            if (to[i] >= new_nvars) throw InvariantViolation("remap_variables: variable not mapped");
            e[to[i]] = x;
        }
        out.push_back({t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(p.field(), new_nvars, std::move(out));
}

// Ideal of an affine ring, as lifted generators; the ring's own defining
// ideal is implicit in every operation.
struct IdealHandle {
    AffineRing ring;
    std::vector<RingElement> gens;
};

inline IdealHandle make_ideal(const AffineRing& ring, std::vector<RingElement> gens) {
    for (const auto& g : gens)
        if (g.ring() != ring) throw ValueError("ideal generator lives in a different ring");
    std::vector<RingElement> kept;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        bool dup = false;
        for (const auto& k : kept)
            if (k == g) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(std::move(g));
    }
    return IdealHandle{ring, std::move(kept)};
}

inline IdealHandle ideal_from_texts(const AffineRing& ring, const std::vector<std::string>& texts) {
    std::vector<RingElement> gens;
    gens.reserve(texts.size());
    for (const auto& t : texts) gens.push_back(parse_element(t, ring));
    return make_ideal(ring, std::move(gens));
}

inline IdealHandle zero_ideal(const AffineRing& ring) { return IdealHandle{ring, {}}; }

inline IdealHandle unit_ideal(const AffineRing& ring) {
    return IdealHandle{ring, {RingElement::one(ring)}};
}

// generators of the full preimage in the ambient polynomial ring
inline std::vector<Polynomial> lifted_generators(const IdealHandle& I) {
    std::vector<Polynomial> out;
    out.reserve(I.gens.size() + I.ring.groebner().elems.size());
    for (const auto& g : I.gens) out.push_back(g.rep());
    for (const auto& q : I.ring.groebner().elems) out.push_back(q);
    return out;
}

inline GroebnerBasis lifted_groebner(const IdealHandle& I,
                                     const ComputeLimits& limits = global_limits()) {
    return buchberger(lifted_generators(I), MonomialOrder::grevlex(), limits);
}

inline bool ideal_contains(const IdealHandle& I, const RingElement& f,
                           const ComputeLimits& limits = global_limits()) {
    if (f.ring() != I.ring) throw ValueError("membership test across different rings");
    return in_ideal(f.rep(), lifted_groebner(I, limits));
}

inline bool is_unit_ideal(const IdealHandle& I, const ComputeLimits& limits = global_limits()) {
    return lifted_groebner(I, limits).contains_one();
}

inline bool is_zero_ideal(const IdealHandle& I) {
    for (const auto& g : I.gens)
        if (!g.is_zero()) return false;
    return true;
}

inline IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
    if (I.ring != J.ring) throw ValueError("ideal sum across different rings");
    std::vector<RingElement> gens = I.gens;
    gens.insert(gens.end(), J.gens.begin(), J.gens.end());
    return make_ideal(I.ring, std::move(gens));
}

inline IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J) {
    if (I.ring != J.ring) throw ValueError("ideal product across different rings");
    std::vector<RingElement> gens;
    for (const auto& a : I.gens)
        for (const auto& b : J.gens) gens.push_back(a * b);
    return make_ideal(I.ring, std::move(gens));
}

namespace idealdetail {

// embed ambient polynomials into [t, x_0..x_{n-1}]
inline Polynomial with_tag(const Polynomial& p) {
    std::vector<std::size_t> to(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) to[i] = i + 1;
    return remap_variables(p, to, p.nvars() + 1);
}

// drop the tag variable again; p must be free of it
inline Polynomial without_tag(const Polynomial& p) {
    std::vector<std::size_t> to(p.nvars());
    to[0] = SIZE_MAX;
    for (std::size_t i = 1; i < p.nvars(); ++i) to[i] = i - 1;
    return remap_variables(p, to, p.nvars() - 1);
}

inline IdealHandle handle_from_polys(const AffineRing& ring, const std::vector<Polynomial>& polys) {
    std::vector<RingElement> gens;
    gens.reserve(polys.size());
    for (const auto& p : polys) gens.push_back(RingElement(ring, p));
    return make_ideal(ring, std::move(gens));
}

// intersection of two ideals of the ambient polynomial ring, by eliminating
// the tag variable t from t*A + (1-t)*B
inline std::vector<Polynomial> intersect_poly(const std::vector<Polynomial>& A,
                                              const std::vector<Polynomial>& B, const FieldTag& f,
                                              std::size_t n, const ComputeLimits& limits) {
    Polynomial t = Polynomial::variable(f, n + 1, 0);
    Polynomial one_minus_t = Polynomial::one(f, n + 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : A) gens.push_back(t * with_tag(g));
    for (const auto& g : B) gens.push_back(one_minus_t * with_tag(g));
    std::vector<Polynomial> elim = eliminate_first(gens, 1, limits);
    std::vector<Polynomial> back;
    back.reserve(elim.size());
    for (const auto& p : elim) back.push_back(without_tag(p));
    return back;
}

}  // namespace idealdetail

// I ∩ J via the tag-variable trick: eliminate t from t*I + (1-t)*J.
inline IdealHandle intersect(const IdealHandle& I, const IdealHandle& J,
                             const ComputeLimits& limits = global_limits()) {
    if (I.ring != J.ring) throw ValueError("ideal intersection across different rings");
    using namespace idealdetail;
    auto back = intersect_poly(lifted_generators(I), lifted_generators(J), I.ring.field(),
                               I.ring.nvars(), limits);
    return handle_from_polys(I.ring, back);
}

// (I : f^inf) via Rabinowitsch: eliminate t from I + <t*f - 1>.
inline IdealHandle saturate(const IdealHandle& I, const RingElement& f,
                            const ComputeLimits& limits = global_limits()) {
    if (f.ring() != I.ring) throw ValueError("saturation across different rings");
    if (f.is_zero()) throw ValueError("saturation at 0 is undefined");
    using namespace idealdetail;
    const std::size_t n = I.ring.nvars();
    const FieldTag fl = I.ring.field();
    Polynomial t = Polynomial::variable(fl, n + 1, 0);
    std::vector<Polynomial> gens;
    for (const auto& g : lifted_generators(I)) gens.push_back(with_tag(g));
    gens.push_back(t * with_tag(f.rep()) - Polynomial::one(fl, n + 1));
    std::vector<Polynomial> elim = eliminate_first(gens, 1, limits);
    std::vector<Polynomial> back;
    back.reserve(elim.size());
    for (const auto& p : elim) back.push_back(without_tag(p));
    return handle_from_polys(I.ring, back);
}

// true iff f lies in the radical of I (Rabinowitsch membership)
inline bool radical_membership(const RingElement& f, const IdealHandle& I,
                               const ComputeLimits& limits = global_limits()) {
    if (f.ring() != I.ring) throw ValueError("radical membership across different rings");
    if (f.is_zero()) return true;
    using namespace idealdetail;
    const std::size_t n = I.ring.nvars();
    const FieldTag fl = I.ring.field();
    Polynomial t = Polynomial::variable(fl, n + 1, 0);
    std::vector<Polynomial> gens;
    for (const auto& g : lifted_generators(I)) gens.push_back(with_tag(g));
    gens.push_back(t * with_tag(f.rep()) - Polynomial::one(fl, n + 1));
    return buchberger(gens, MonomialOrder::block_elim(1), limits).contains_one();
}

// (I : g) for a single element, via (lift(I) ∩ g*P) / g in the ambient
// polynomial ring; the division is exact because the intersection is taken
// against the plain principal ideal.
inline IdealHandle quotient_by_element(const IdealHandle& I, const RingElement& g,
                                       const ComputeLimits& limits = global_limits()) {
    if (g.is_zero()) return unit_ideal(I.ring);
    using namespace idealdetail;
    auto meet = intersect_poly(lifted_generators(I), {g.rep()}, I.ring.field(), I.ring.nvars(), limits);
    std::vector<RingElement> out;
    for (const auto& h : meet) {
        RingElement u(I.ring, h.exact_divide(g.rep()));
        if (!u.is_zero()) out.push_back(u);
    }
    return make_ideal(I.ring, std::move(out));
}

// (I : J) = ∩ over generators g of J of (I : g); (I : 0) is the unit ideal.
inline IdealHandle quotient(const IdealHandle& I, const IdealHandle& J,
                            const ComputeLimits& limits = global_limits()) {
    if (I.ring != J.ring) throw ValueError("ideal quotient across different rings");
    bool any = false;
    IdealHandle acc = unit_ideal(I.ring);
    for (const auto& g : J.gens) {
        if (g.is_zero()) continue;
        IdealHandle q = quotient_by_element(I, g, limits);
        acc = any ? intersect(acc, q, limits) : q;
        any = true;
    }
    if (!any) return unit_ideal(I.ring);
    return acc;
}

inline bool ideals_equal(const IdealHandle& I, const IdealHandle& J,
                         const ComputeLimits& limits = global_limits()) {
    if (I.ring != J.ring) throw ValueError("ideal comparison across different rings");
    return lifted_groebner(I, limits).elems == lifted_groebner(J, limits).elems;
}

namespace idealdetail {

inline bool subset_independent(const std::vector<Monomial>& leads, const std::vector<bool>& in_set) {
    for (const auto& m : leads) {
        bool supported = true;
        for (std::size_t i = 0; i < in_set.size() && supported; ++i)
            if (m.exp(i) && !in_set[i]) supported = false;
        if (supported) return false;  // some lead monomial lives inside the set
    }
    return true;
}

inline void max_independent(const std::vector<Monomial>& leads, std::vector<bool>& in_set,
                            std::size_t next, std::size_t count, std::size_t& best) {
    if (count + (in_set.size() - next) <= best) return;
    if (next == in_set.size()) {
        best = std::max(best, count);
        return;
    }
    in_set[next] = true;
    if (subset_independent(leads, in_set))
        max_independent(leads, in_set, next + 1, count + 1, best);
    in_set[next] = false;
    max_independent(leads, in_set, next + 1, count, best);
}

}  // namespace idealdetail

// Krull dimension of P/I from the initial ideal: the largest variable subset
// meeting no lead-monomial support.  The zero ring has dimension -1.
inline int dimension_from_leads(const std::vector<Monomial>& leads, std::size_t nvars) {
    for (const auto& m : leads)
        if (m.is_one()) return -1;
    std::vector<bool> in_set(nvars, false);
    std::size_t best = 0;
    idealdetail::max_independent(leads, in_set, 0, 0, best);
    return static_cast<int>(best);
}

inline int krull_dimension(const AffineRing& R) {
    return dimension_from_leads(R.groebner().leads, R.nvars());
}

inline int ideal_dimension(const IdealHandle& I, const ComputeLimits& limits = global_limits()) {
    GroebnerBasis gb = lifted_groebner(I, limits);
    return dimension_from_leads(gb.leads, I.ring.nvars());
}

// Greedy minimal generating subset: drop any generator contained in the
// ideal of the remaining ones; deterministic in the input order.
inline IdealHandle trim(const IdealHandle& I, const ComputeLimits& limits = global_limits()) {
    std::vector<RingElement> current;
    for (const auto& g : I.gens)
        if (!g.is_zero()) current.push_back(g);
    for (std::size_t i = 0; i < current.size();) {
        std::vector<RingElement> others;
        for (std::size_t j = 0; j < current.size(); ++j)
            if (j != i) others.push_back(current[j]);
        IdealHandle rest = make_ideal(I.ring, others);
        if (ideal_contains(rest, current[i], limits))
            current.erase(current.begin() + i);
        else
            ++i;
    }
    return IdealHandle{I.ring, std::move(current)};
}

}  // namespace seminorm

#endif
