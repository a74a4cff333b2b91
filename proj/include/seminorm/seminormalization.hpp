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

#ifndef SEMINORM_SEMINORMALIZATION_HPP
#define SEMINORM_SEMINORMALIZATION_HPP

#include "normalization.hpp"

namespace seminorm {

// Threaded through the recursion: the counter grows by 2 per recursive call
// (even = renames in the main driver, odd = renames inside the intersection
// step), the symbol names the final output variables, and the seed feeds
// the randomized pieces of factorization.
struct RecursionContext {
    int counter = 0;
    std::string variable_symbol = "Yy";
    std::uint64_t rng_seed = 0;

    RecursionContext descend() const { return {counter + 2, variable_symbol, rng_seed}; }
    DecompositionContext decomp() const { return {rng_seed}; }
};

struct SeminormalizationResult {
    AffineRing sn_ring;     // R^SN
    RingMap map_in;         // R -> R^SN
    RingMap map_to_norm;    // R^SN -> R^N
};

struct RenamedRing {
    AffineRing ring;
    RingMap to_renamed;
    RingMap from_renamed;
};

// Fresh ring with variables symbol_<start>, symbol_<start+1>, ...; the
// defining polynomials are untouched (renaming is positional).
inline RenamedRing rename_variables(const AffineRing& R, const std::string& symbol,
                                    unsigned start_index = 0,
                                    const ComputeLimits& limits = global_limits()) {
    if (!is_valid_identifier(symbol)) throw ValueError("rename_variables: invalid symbol");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        std::string nm = symbol + "_" + std::to_string(start_index + i);
        for (const auto& old : R.vars())
            if (old == nm)
                throw NameCollision("rename_variables: '" + nm + "' collides with an existing variable");
        names.push_back(std::move(nm));
    }
    AffineRing renamed(R.field(), names, R.defining(), limits);
    std::vector<RingElement> fwd, bwd;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        fwd.push_back(RingElement::variable(renamed, i));
        bwd.push_back(RingElement::variable(R, i));
    }
    return {renamed, RingMap(R, renamed, std::move(fwd)), RingMap(renamed, R, std::move(bwd))};
}

struct OverringResult {
    AffineRing O;
    RingMap incl_S;  // S -> O
    RingMap incl_B;  // B -> O
};

// A reduced common overring of the two extensions S and B of A, glued over
// A, whose minimal primes are in bijection with the minimal primes of B:
// the tensor of the two extensions with the superfluous components dropped.
inline OverringResult find_overring(const RingMap& aS, const RingMap& aB,
                                    const RecursionContext& ctx = {},
                                    const ComputeLimits& limits = global_limits()) {
    if (aS.source() != aB.source()) throw ValueError("find_overring: extensions of different rings");
    const AffineRing& S = aS.target();
    const AffineRing& B = aB.target();
    const FieldTag field = S.field();
    const std::size_t ns = S.nvars(), nb = B.nvars();

    std::set<std::string> taken;
    std::vector<std::string> names;
    for (const auto& v : S.vars()) names.push_back(fresh_name(v, taken));
    for (const auto& v : B.vars()) names.push_back(fresh_name(v, taken));

    auto embed_S = [&](const Polynomial& p) {
        std::vector<std::size_t> to(ns);
        for (std::size_t i = 0; i < ns; ++i) to[i] = i;
        return remap_variables(p, to, ns + nb);
    };
    auto embed_B = [&](const Polynomial& p) {
        std::vector<std::size_t> to(nb);
        for (std::size_t i = 0; i < nb; ++i) to[i] = ns + i;
        return remap_variables(p, to, ns + nb);
    };

    std::vector<Polynomial> rels;
    for (const auto& q : S.groebner().elems) rels.push_back(embed_S(q));
    for (const auto& q : B.groebner().elems) rels.push_back(embed_B(q));
    for (std::size_t i = 0; i < aS.source().nvars(); ++i)
        rels.push_back(embed_S(aS.images()[i].rep()) - embed_B(aB.images()[i].rep()));
    AffineRing O0(field, names, rels, limits);

    MinimalPrimeSet compsO = component_primes(O0, ctx.decomp(), limits);
    MinimalPrimeSet compsB = component_primes(B, ctx.decomp(), limits);

    // contraction of each component of O0 to B
    std::vector<RingElement> b_vars_in_O0;
    for (std::size_t i = 0; i < nb; ++i) b_vars_in_O0.push_back(RingElement::variable(O0, ns + i));
    std::vector<IdealHandle> contractions;
    for (const auto& P : compsO.primes) {
        std::vector<Polynomial> defs = O0.defining();
        for (const auto& g : P.gens) defs.push_back(g.rep());
        AffineRing OP(field, names, std::move(defs), limits);
        std::vector<RingElement> imgs;
        for (std::size_t i = 0; i < nb; ++i) imgs.push_back(RingElement::variable(OP, ns + i));
        RingMap bmap(B, OP, std::move(imgs));
        contractions.push_back(kernel(bmap, limits));
    }

    std::vector<std::size_t> selected;
    for (const auto& b : compsB.primes) {
        std::size_t hit = compsO.primes.size();
        unsigned matches = 0;
        for (std::size_t k = 0; k < compsO.primes.size(); ++k) {
            if (ideals_equal(contractions[k], b, limits)) {
                hit = k;
                ++matches;
            }
        }
        if (matches == 0)
            throw InjectivityFailure("find_overring: a component of B is not dominated by the tensor");
        if (matches > 1)
            throw InjectivityFailure("find_overring: a component of B is dominated more than once");
        selected.push_back(hit);
    }

    IdealHandle meet = compsO.primes[selected[0]];
    for (std::size_t i = 1; i < selected.size(); ++i)
        meet = intersect(meet, compsO.primes[selected[i]], limits);
    AffineRing O(field, names, lifted_generators(meet), limits);

    std::vector<RingElement> s_imgs, b_imgs;
    for (std::size_t i = 0; i < ns; ++i) s_imgs.push_back(RingElement::variable(O, i));
    for (std::size_t i = 0; i < nb; ++i) b_imgs.push_back(RingElement::variable(O, ns + i));
    OverringResult out{O, RingMap(S, O, std::move(s_imgs)), RingMap(B, O, std::move(b_imgs))};

    if (!is_zero_ideal(kernel(out.incl_S, limits)))
        throw InjectivityFailure("find_overring: dropping components broke the inclusion of S");
    if (!is_zero_ideal(kernel(out.incl_B, limits)))
        throw InjectivityFailure("find_overring: dropping components broke the inclusion of B");
    invariant(compose(out.incl_S, aS) == compose(out.incl_B, aB),
              "find_overring: the two inclusions disagree on the base");
    return out;
}

struct IntersectionResult {
    AffineRing D;
    RingMap psi;     // D -> B
    RingMap from_A;  // A -> D
};

// D = S ∩ B inside the overring: the kernel of the A-module map
// S (+) B -> O, (a, b) -> a - b, with its generators read off in B and the
// ring they generate presented.
inline IntersectionResult intersect_seminormalization_and_extension(
    const RingMap& aS, const RingMap& aB, const RecursionContext& ctx = {},
    const ComputeLimits& limits = global_limits()) {
    const AffineRing& A = aS.source();
    const AffineRing& B = aB.target();
    OverringResult over = find_overring(aS, aB, ctx, limits);

    FiniteMapData pfS = pushforward(aS, limits);
    FiniteMapData pfB = pushforward(aB, limits);
    FiniteMapData pfO = pushforward(compose(over.incl_B, aB), limits);
    auto relsO = pushforward_relations(pfO, limits);

    std::vector<std::vector<RingElement>> cols;
    for (const auto& s : pfS.basis) cols.push_back(pfO.write(over.incl_S(s)));
    for (const auto& b : pfB.basis) {
        auto w = pfO.write(over.incl_B(b));
        for (auto& e : w) e = -e;
        cols.push_back(std::move(w));
    }
    auto kern = kernel_generators(A, pfO.rank(), cols, relsO, limits);

    // B-components of the kernel generators, then the A-variable images
    std::vector<RingElement> gens;
    for (const auto& v : kern) {
        RingElement b = RingElement::zero(B);
        for (std::size_t k = 0; k < pfB.rank(); ++k) b += aB(v[pfS.rank() + k]) * pfB.basis[k];
        gens.push_back(b);
    }
    const std::size_t a_offset = gens.size();
    for (std::size_t i = 0; i < A.nvars(); ++i) gens.push_back(aB.images()[i]);

    std::string stem = "sv" + std::to_string(ctx.counter + 1) + "_";
    SubalgebraResult sub = subalgebra_presentation(B, gens, stem, limits);

    IntersectionResult out;
    out.D = sub.ring;
    out.psi = sub.inclusion;
    std::vector<RingElement> a_images;
    for (std::size_t i = 0; i < A.nvars(); ++i) a_images.push_back(sub.rep_of_input[a_offset + i]);
    out.from_A = RingMap(A, out.D, std::move(a_images));
    invariant(compose(out.psi, out.from_A) == aB,
              "intersection: the base does not factor through D");
    return out;
}

// The recursive seminormalization driver.  The input is assumed reduced
// (the CLI verifies this up front).
inline SeminormalizationResult seminormalize(const AffineRing& R, const RecursionContext& ctx = {},
                                             const ComputeLimits& limits = global_limits()) {
    if (R.is_zero_ring()) throw NotReduced("seminormalize: the zero ring");

    // base case: dimension 0 or already normal -> the ring itself, unchanged
    if (krull_dimension(R) <= 0 || is_normal(R, true, ctx.decomp(), limits))
        return {R, RingMap::identity(R), RingMap::identity(R)};

    // normalization and the radical conductor on both sides
    NormalizationResult n = normalize_reduced(R, ctx.decomp(), limits);
    const AffineRing& RN = n.normal_ring;
    IdealHandle cond = conductor(n, limits);
    invariant(!is_unit_ideal(cond, limits), "seminormalize: unit conductor on a non-normal ring");
    IdealHandle radc_R = radical(cond, ctx.decomp(), limits);
    std::vector<RingElement> cn_gens;
    for (const auto& g : cond.gens) cn_gens.push_back(n.map(g));
    IdealHandle radc_N = radical(make_ideal(RN, std::move(cn_gens)), ctx.decomp(), limits);

    // A = R / sqrt(c R)
    std::vector<Polynomial> a_defs = R.defining();
    for (const auto& g : radc_R.gens) a_defs.push_back(g.rep());
    AffineRing A(R.field(), R.vars(), std::move(a_defs), limits);
    invariant(krull_dimension(A) < krull_dimension(R),
              "seminormalize: recursion did not drop the dimension");
    std::vector<RingElement> pa_imgs;
    for (std::size_t i = 0; i < R.nvars(); ++i) pa_imgs.push_back(RingElement::variable(A, i));
    RingMap piA(R, A, std::move(pa_imgs));

    // B = R^N / sqrt(c R^N)
    std::vector<Polynomial> b_defs = RN.defining();
    for (const auto& g : radc_N.gens) b_defs.push_back(g.rep());
    AffineRing B(RN.field(), RN.vars(), std::move(b_defs), limits);
    std::vector<RingElement> pb_imgs;
    for (std::size_t i = 0; i < RN.nvars(); ++i) pb_imgs.push_back(RingElement::variable(B, i));
    RingMap piB(RN, B, std::move(pb_imgs));

    // the induced inclusion A -> B
    std::vector<RingElement> ab_imgs;
    for (std::size_t i = 0; i < R.nvars(); ++i) ab_imgs.push_back(piB(n.map(RingElement::variable(R, i))));
    RingMap aB(A, B, std::move(ab_imgs));
    invariant(is_zero_ideal(kernel(aB, limits)), "seminormalize: A does not embed into B");

    // recursive call on the lower-dimensional ring
    SeminormalizationResult sub = seminormalize(A, ctx.descend(), limits);

    // D = A^SN ∩ B, then the pullback that glues it back under R^N
    IntersectionResult inter =
        intersect_seminormalization_and_extension(sub.map_in, aB, ctx, limits);
    RingMap beta = compose(inter.from_A, piA);
    std::string stem = "sv" + std::to_string(ctx.counter) + "_";
    PullbackResult pb = pullback(piB, inter.psi, n.map, beta, stem, limits);

    SeminormalizationResult out{pb.ring, pb.from_base, pb.to_A};
    if (ctx.counter == 0) {
        for (std::size_t i = 0; i < out.sn_ring.nvars(); ++i) {
            std::string nm = ctx.variable_symbol + "_" + std::to_string(i);
            for (const auto& old : R.vars())
                if (old == nm)
                    throw NameCollision("seminormalize: symbol collides with a variable of the input ring");
        }
        RenamedRing ren = rename_variables(out.sn_ring, ctx.variable_symbol, 0, limits);
        out.sn_ring = ren.ring;
        out.map_in = compose(ren.to_renamed, out.map_in);
        out.map_to_norm = compose(out.map_to_norm, ren.from_renamed);
    }

    // structural invariants
    invariant(is_zero_ideal(kernel(out.map_in, limits)), "seminormalize: R does not embed into R^SN");
    invariant(is_zero_ideal(kernel(out.map_to_norm, limits)),
              "seminormalize: R^SN does not embed into R^N");
    invariant(compose(out.map_to_norm, out.map_in) == n.map,
              "seminormalize: the composite differs from the normalization map");
    return out;
}

// R is seminormal iff the canonical map R -> R^SN is an isomorphism; no
// shortcut criterion is used.
inline bool is_seminormal(const AffineRing& R, const RecursionContext& ctx = {},
                          bool assume_reduced = false,
                          const ComputeLimits& limits = global_limits()) {
    if (!assume_reduced && !is_reduced_ring(R, ctx.decomp(), limits))
        throw NotReduced("is_seminormal: ring is not reduced");
    SeminormalizationResult res = seminormalize(R, ctx, limits);
    return is_zero_ideal(kernel(res.map_in, limits)) && is_surjective(res.map_in, limits);
}

}  // namespace seminorm

#endif
