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

#ifndef SEMINORM_NORMALIZATION_HPP
#define SEMINORM_NORMALIZATION_HPP

#include <functional>

#include "constructions.hpp"
#include "decomposition.hpp"

namespace seminorm {

struct NormalizationResult {
    AffineRing normal_ring;
    RingMap map;                            // R -> normal_ring
    std::vector<RingElement> idempotents;   // in normal_ring, one per component
    std::vector<RingElement> denominators;  // per component, lifted to R
};

namespace normdetail {

// c x c minors of the Jacobian of the generators, skipping zero pivots
inline std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& gens, std::size_t nvars,
                                               std::size_t c, const FieldTag& field) {
    std::vector<std::vector<Polynomial>> jac(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        jac[i].reserve(nvars);
        for (std::size_t v = 0; v < nvars; ++v) jac[i].push_back(gens[i].derivative(v));
    }
    std::vector<Polynomial> minors;
    if (c == 0 || c > gens.size() || c > nvars) return minors;

    std::vector<std::size_t> rows(c), cols(c);
    std::function<Polynomial(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det =
        [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& cl) -> Polynomial {
        if (r.size() == 1) return jac[r[0]][cl[0]];
        Polynomial acc = Polynomial::zero(field, nvars);
        for (std::size_t j = 0; j < cl.size(); ++j) {
            const Polynomial& pivot = jac[r[0]][cl[j]];
            if (pivot.is_zero()) continue;
            std::vector<std::size_t> subr(r.begin() + 1, r.end());
            std::vector<std::size_t> subc;
            for (std::size_t l = 0; l < cl.size(); ++l)
                if (l != j) subc.push_back(cl[l]);
            Polynomial minor = det(subr, subc);
            if (minor.is_zero()) continue;
            Polynomial term = pivot * minor;
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };

    std::function<void(std::size_t, std::size_t)> choose_cols = [&](std::size_t start, std::size_t k) {
        if (k == c) {
            Polynomial d = det(rows, cols);
            if (!d.is_zero()) minors.push_back(d);
            return;
        }
        for (std::size_t v = start; v < nvars; ++v) {
            cols[k] = v;
            choose_cols(v + 1, k + 1);
        }
    };
    std::function<void(std::size_t, std::size_t)> choose_rows = [&](std::size_t start, std::size_t k) {
        if (k == c) {
            choose_cols(0, 0);
            return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) {
            rows[k] = i;
            choose_rows(i + 1, k + 1);
        }
    };
    choose_rows(0, 0);
    return minors;
}

}  // namespace normdetail

// Minimal primes of the zero ideal: the components of Spec R.
inline MinimalPrimeSet component_primes(const AffineRing& R, const DecompositionContext& ctx = {},
                                        const ComputeLimits& limits = global_limits()) {
    return minimal_primes(zero_ideal(R), ctx, limits);
}

// Radical test ideal cutting out the non-normal locus: per-component radical
// Jacobian ideals, intersected with the pairwise component overlaps.
inline IdealHandle nonnormal_locus_ideal(const AffineRing& R, const MinimalPrimeSet& comps,
                                         const DecompositionContext& ctx = {},
                                         const ComputeLimits& limits = global_limits()) {
    using namespace normdetail;
    const std::size_t n = R.nvars();
    IdealHandle acc = unit_ideal(R);
    for (std::size_t i = 0; i < comps.primes.size(); ++i) {
        GroebnerBasis qgb = lifted_groebner(comps.primes[i], limits);
        int dim = dimension_from_leads(qgb.leads, n);
        std::size_t c = n - static_cast<std::size_t>(std::max(dim, 0));
        IdealHandle ji;
        if (c == 0) {
            ji = unit_ideal(R);  // the component is the whole ambient space
        } else {
            std::vector<RingElement> gens;
            for (const auto& m : jacobian_minors(qgb.elems, n, c, R.field())) {
                RingElement e(R, m);
                if (!e.is_zero()) gens.push_back(e);
            }
            for (const auto& g : comps.primes[i].gens) gens.push_back(g);
            IdealHandle j0 = make_ideal(R, std::move(gens));
            ji = is_unit_ideal(j0, limits) ? unit_ideal(R) : radical(j0, ctx, limits);
        }
        acc = (i == 0) ? ji : intersect(acc, ji, limits);
        for (std::size_t j = 0; j < i; ++j) {
            IdealHandle overlap = ideal_sum(comps.primes[i], comps.primes[j]);
            if (is_unit_ideal(overlap, limits)) continue;
            acc = intersect(acc, radical(overlap, ctx, limits), limits);
        }
    }
    return trim(acc, limits);
}

// deterministic search for an element of J avoiding every minimal prime
inline RingElement nonzerodivisor_in(const IdealHandle& J, const MinimalPrimeSet& comps,
                                     const ComputeLimits& limits = global_limits()) {
    std::vector<GroebnerBasis> prime_gbs;
    for (const auto& p : comps.primes) prime_gbs.push_back(lifted_groebner(p, limits));
    auto avoids_all = [&](const RingElement& f) {
        if (f.is_zero()) return false;
        for (const auto& gb : prime_gbs)
            if (in_ideal(f.rep(), gb)) return false;
        return true;
    };
    for (const auto& g : J.gens)
        if (avoids_all(g)) return g;

    const std::size_t n = J.gens.size();
    for (unsigned span = 2; span <= std::min<std::size_t>(3, n); ++span) {
        std::vector<std::size_t> idx(span);
        std::function<const RingElement*(std::size_t, std::size_t, RingElement)> rec =
            [&](std::size_t start, std::size_t k, RingElement acc) -> const RingElement* {
            static thread_local RingElement hit;
            for (std::size_t i = start; i < n; ++i) {
                RingElement cand = acc + J.gens[i];
                if (k + 1 == span) {
                    if (avoids_all(cand)) {
                        hit = cand;
                        return &hit;
                    }
                } else if (auto* r = rec(i + 1, k + 1, cand)) {
                    return r;
                }
            }
            return nullptr;
        };
        if (auto* r = rec(0, 0, RingElement::zero(J.ring))) return *r;
    }
    for (long scale = 2; scale <= 11; ++scale) {
        RingElement acc = RingElement::zero(J.ring);
        long s = 1;
        for (const auto& g : J.gens) {
            acc += g * RingElement::constant(J.ring, Scalar::from_int(J.ring.field(), s));
            s = (s * scale) % 97 + 1;
        }
        if (avoids_all(acc)) return acc;
    }
    throw InvariantViolation("no nonzerodivisor found in the test ideal");
}

// Grauert-Remmert normality test for a reduced ring: with J the radical test
// ideal and f a nonzerodivisor in it, R is normal iff (f*J : J) = (f).
inline bool is_normal(const AffineRing& R, bool assume_reduced = false,
                      const DecompositionContext& ctx = {},
                      const ComputeLimits& limits = global_limits()) {
    if (R.is_zero_ring()) throw NotReduced("is_normal: the zero ring");
    if (!assume_reduced && !is_reduced_ring(R, ctx, limits))
        throw NotReduced("is_normal: ring is not reduced");
    if (R.is_polynomial_ring()) return true;
    MinimalPrimeSet comps = component_primes(R, ctx, limits);
    IdealHandle J = nonnormal_locus_ideal(R, comps, ctx, limits);
    if (is_unit_ideal(J, limits)) return true;
    RingElement f = nonzerodivisor_in(J, comps, limits);
    IdealHandle fJ = ideal_product(make_ideal(R, {f}), J);
    IdealHandle H = quotient(fJ, J, limits);
    return ideals_equal(H, make_ideal(R, {f}), limits);
}

// de Jong endomorphism-ring iteration for a domain: enlarge R inside its
// fraction field by Hom(J, J) = (1/f)(f*J : J) until the Grauert-Remmert
// test stabilizes.  The result is presented minimally; `map` embeds the
// input and `denominators` holds one element d of R with d * R^N inside R.
inline NormalizationResult normalize_domain(const AffineRing& R, const DecompositionContext& ctx = {},
                                            const ComputeLimits& limits = global_limits()) {
    using namespace normdetail;
    AffineRing cur = R;
    RingMap embed = RingMap::identity(R);        // R -> cur
    RingElement denom_in_R = RingElement::one(R);  // d with d * cur ⊆ image(R)

    for (unsigned iteration = 0;; ++iteration) {
        if (iteration > 64) throw InvariantViolation("normalize_domain: iteration did not stabilize");
        const std::size_t n = cur.nvars();
        const GroebnerBasis& q = cur.groebner();
        if (q.elems.empty()) break;  // polynomial ring

        int dim = dimension_from_leads(q.leads, n);
        std::size_t c = n - static_cast<std::size_t>(std::max(dim, 0));
        std::vector<RingElement> jgens;
        for (const auto& m : jacobian_minors(q.elems, n, c, cur.field())) {
            RingElement e(cur, m);
            if (!e.is_zero()) jgens.push_back(e);
        }
        IdealHandle j0 = make_ideal(cur, std::move(jgens));
        if (is_unit_ideal(j0, limits)) break;  // smooth
        if (j0.gens.empty())
            throw ValueError("normalize_domain: the ring is singular everywhere; not a reduced domain");
        IdealHandle J = radical(j0, ctx, limits);
        if (is_unit_ideal(J, limits)) break;

        RingElement f = RingElement::zero(cur);
        for (const auto& g : J.gens)
            if (!g.is_zero()) {
                f = g;
                break;
            }
        if (f.is_zero()) throw ValueError("normalize_domain: radical test ideal is zero; not a domain");

        IdealHandle fJ = ideal_product(make_ideal(cur, {f}), J);
        IdealHandle H = trim(quotient(fJ, J, limits), limits);
        IdealHandle fI = make_ideal(cur, {f});
        std::vector<RingElement> enlargers;
        for (const auto& u : H.gens)
            if (!ideal_contains(fI, u, limits)) enlargers.push_back(u);
        if (enlargers.empty()) break;  // (fJ : J) = (f): normal

        // adjoin u_k / f: new variables w_k with relations saturated at f
        const FieldTag field = cur.field();
        std::set<std::string> taken(cur.vars().begin(), cur.vars().end());
        std::vector<std::string> names = cur.vars();
        const std::size_t m = enlargers.size();
        for (std::size_t k = 0; k < m; ++k)
            names.push_back(fresh_name("w" + std::to_string(iteration) + "_" + std::to_string(k), taken));
        auto widen = [&](const Polynomial& p) {
            std::vector<std::size_t> to(n);
            for (std::size_t i = 0; i < n; ++i) to[i] = i;
            return remap_variables(p, to, n + m);
        };
        std::vector<Polynomial> rels;
        for (const auto& g : cur.groebner().elems) rels.push_back(widen(g));
        for (std::size_t k = 0; k < m; ++k)
            rels.push_back(widen(f.rep()) * Polynomial::variable(field, n + m, n + k) -
                           widen(enlargers[k].rep()));
        std::vector<Polynomial> sat =
            decompdetail::saturate_poly(rels, widen(f.rep()), field, n + m, limits);
        AffineRing next(field, names, sat, limits);

        std::vector<RingElement> step_images;
        for (std::size_t i = 0; i < n; ++i) step_images.push_back(RingElement::variable(next, i));
        RingMap step(cur, next, std::move(step_images));

        MinimizedRing mini = minimize_presentation(next, limits);
        RingMap into_next = compose(mini.to_min, compose(step, embed));

        // track the common denominator: d' = preimage of (d * f) in R
        RingElement d_next_img = compose(step, embed)(denom_in_R) * step(f);
        {
            mapdetail::MapGraph g = mapdetail::build_graph(compose(step, embed), limits);
            Polynomial nf = normal_form(g.embed_target(d_next_img.rep()), g.gb);
            invariant(nf.free_of_first(g.t), "normalize_domain: denominator has no preimage");
            denom_in_R = RingElement(R, g.restrict_source(nf));
        }

        cur = mini.ring;
        embed = into_next;
    }

    NormalizationResult out{cur, embed, {RingElement::one(cur)}, {denom_in_R}};
    return out;
}

// Normalization of a reduced ring: normalize each component domain, take the
// ring product, and assemble the map through the orthogonal idempotents.
inline NormalizationResult normalize_reduced(const AffineRing& R, const DecompositionContext& ctx = {},
                                             const ComputeLimits& limits = global_limits()) {
    MinimalPrimeSet comps = component_primes(R, ctx, limits);
    if (comps.primes.size() <= 1) return normalize_domain(R, ctx, limits);

    std::vector<NormalizationResult> parts;
    std::vector<RingMap> to_component;  // R -> N_i
    std::vector<RingElement> denoms;
    std::vector<AffineRing> normal_factors;
    for (std::size_t i = 0; i < comps.primes.size(); ++i) {
        std::vector<Polynomial> defs;
        for (const auto& g : comps.primes[i].gens) defs.push_back(g.rep());
        for (const auto& q : R.groebner().elems) defs.push_back(q);
        AffineRing Ci(R.field(), R.vars(), std::move(defs), limits);
        std::vector<RingElement> proj_images;
        for (std::size_t v = 0; v < R.nvars(); ++v) proj_images.push_back(RingElement::variable(Ci, v));
        RingMap pi(R, Ci, std::move(proj_images));
        MinimizedRing mini = minimize_presentation(Ci, limits);
        NormalizationResult ni = normalize_domain(mini.ring, ctx, limits);
        parts.push_back(ni);
        to_component.push_back(compose(ni.map, compose(mini.to_min, pi)));
        normal_factors.push_back(ni.normal_ring);
        // lift the component denominator back to R (any representative)
        RingElement d_in_mini = ni.denominators[0];
        RingElement d_in_Ci = mini.from_min(d_in_mini);
        denoms.push_back(RingElement(R, d_in_Ci.rep()));
    }

    RingProductResult prod = ring_product(normal_factors, limits);
    std::vector<RingElement> images;
    for (std::size_t v = 0; v < R.nvars(); ++v) {
        RingElement acc = RingElement::zero(prod.product);
        for (std::size_t i = 0; i < normal_factors.size(); ++i)
            acc += prod.idempotents[i] * prod.transport(i, to_component[i](RingElement::variable(R, v)));
        images.push_back(acc);
    }
    RingMap phi(R, prod.product, std::move(images));

    NormalizationResult out{prod.product, phi, prod.idempotents, denoms};
    return out;
}

// Conductor Ann_R(R^N / R), via the pushforward presentation of R^N over R
// and the annihilator of the cokernel of R -> R^N.
inline IdealHandle conductor(const NormalizationResult& n,
                             const ComputeLimits& limits = global_limits()) {
    FiniteMapData pf = pushforward(n.map, limits);
    auto rels = pushforward_relations(pf, limits);
    const AffineRing& R = n.map.source();
    // locate 1 in the basis and add it as a relation (the image of R)
    std::size_t one_idx = pf.rank();
    for (std::size_t i = 0; i < pf.basis_monos.size(); ++i)
        if (pf.basis_monos[i].is_one()) one_idx = i;
    invariant(one_idx < pf.rank(), "conductor: pushforward basis does not contain 1");
    std::vector<RingElement> e1(pf.rank(), RingElement::zero(R));
    e1[one_idx] = RingElement::one(R);
    rels.push_back(std::move(e1));
    ModulePresentation coker{R, pf.rank(), std::move(rels)};
    return trim(annihilator(coker, limits), limits);
}

}  // namespace seminorm

#endif
