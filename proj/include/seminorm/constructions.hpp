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

#ifndef SEMINORM_CONSTRUCTIONS_HPP
#define SEMINORM_CONSTRUCTIONS_HPP

#include "ringmap.hpp"

namespace seminorm {

// -----------------------------------------------------------------------
// minimize_presentation
// -----------------------------------------------------------------------

struct MinimizedRing {
    AffineRing ring;
    RingMap to_min;    // original -> minimized
    RingMap from_min;  // minimized -> original
};

// Repeatedly eliminate a variable v that occurs in a relation as a linear
// term c*v with v absent from the other terms, substituting v = g.
inline MinimizedRing minimize_presentation(const AffineRing& R,
                                           const ComputeLimits& limits = global_limits()) {
    const FieldTag field = R.field();
    std::vector<std::string> names = R.vars();
    std::vector<Polynomial> gens = R.groebner().elems;
    // original variable i, expressed over the current variable list
    std::vector<Polynomial> orig(R.nvars());
    for (std::size_t i = 0; i < R.nvars(); ++i)
        orig[i] = Polynomial::variable(field, R.nvars(), i);

    bool progress = true;
    while (progress) {
        progress = false;
        const std::size_t n = names.size();
        for (std::size_t gi = 0; gi < gens.size() && !progress; ++gi) {
            const Polynomial& g = gens[gi];
            for (std::size_t v = 0; v < n && !progress; ++v) {
                Scalar lin = Scalar::zero(field);
                bool v_elsewhere = false;
                for (const auto& t : g.terms()) {
                    std::uint32_t e = t.mono.exp(v);
                    if (e == 0) continue;
                    if (e == 1 && t.mono.deg() == 1) {
                        if (!lin.is_zero()) v_elsewhere = true;  // two linear v-terms cannot happen
                        lin = t.coeff;
                    } else {
                        v_elsewhere = true;
                    }
                }
                if (lin.is_zero() || v_elsewhere) continue;

                // v = (c*v - g)/c
                Polynomial expr =
                    (Polynomial::term(lin, Monomial::variable(n, v)) - g).times_scalar(lin.inverse());
                // substitute v -> expr, then drop the variable
                std::vector<Polynomial> images;
                images.reserve(n);
                for (std::size_t w = 0; w < n; ++w)
                    images.push_back(w == v ? expr : Polynomial::variable(field, n, w));
                std::vector<std::size_t> drop_map(n, SIZE_MAX);
                for (std::size_t w = 0; w < n; ++w) {
                    if (w < v) drop_map[w] = w;
                    else if (w > v) drop_map[w] = w - 1;
                }

                auto rewrite = [&](const Polynomial& p) {
                    Polynomial sub = p.substitute(images);
                    return remap_variables(sub, drop_map, n - 1);
                };
                std::vector<Polynomial> new_gens;
                for (std::size_t gj = 0; gj < gens.size(); ++gj) {
                    if (gj == gi) continue;
                    Polynomial r = rewrite(gens[gj]);
                    if (!r.is_zero()) new_gens.push_back(r);
                }
                for (auto& o : orig) o = rewrite(o);
                names.erase(names.begin() + v);
                gens = std::move(new_gens);
                progress = true;
            }
        }
    }

    AffineRing small(field, names, gens, limits);
    std::vector<RingElement> to_images;
    to_images.reserve(orig.size());
    for (const auto& o : orig) to_images.push_back(RingElement(small, o));
    RingMap to_min(R, small, std::move(to_images));
    std::vector<RingElement> from_images;
    from_images.reserve(names.size());
    for (const auto& nm : names) from_images.push_back(RingElement::variable(R, R.var_index(nm)));
    RingMap from_min(small, R, std::move(from_images));

    // the two maps must be mutually inverse on variables
    for (std::size_t i = 0; i < R.nvars(); ++i)
        invariant(from_min(to_min.images()[i]) == RingElement::variable(R, i),
                  "minimize_presentation: maps are not inverse on the original ring");
    for (std::size_t i = 0; i < small.nvars(); ++i)
        invariant(to_min(from_min.images()[i]) == RingElement::variable(small, i),
                  "minimize_presentation: maps are not inverse on the minimized ring");
    return {small, to_min, from_min};
}

// -----------------------------------------------------------------------
// ring products with orthogonal idempotents
// -----------------------------------------------------------------------

struct RingProductResult {
    AffineRing product;
    std::vector<RingElement> idempotents;                  // e_i, one per factor
    std::vector<std::vector<RingElement>> var_images;      // factor i, variable j
    std::vector<AffineRing> factors;

    // Substitute a factor element into the product coordinates.  This is a
    // variable-tracking device, not a ring map (the factor's identity goes
    // to 1, not to e_i); multiply by e_i to land in the factor summand.
    RingElement transport(std::size_t factor, const RingElement& x) const {
        std::vector<Polynomial> images;
        images.reserve(var_images[factor].size());
        for (const auto& im : var_images[factor]) images.push_back(im.rep());
        RingElement acc = RingElement::zero(product);
        for (const auto& t : x.rep().terms()) {
            Polynomial prod = Polynomial::constant(t.coeff, product.nvars());
            for (std::size_t i = 0; i < x.rep().nvars() && !prod.is_zero(); ++i)
                if (std::uint32_t e = t.mono.exp(i)) prod *= images[i].pow(e);
            acc += RingElement(product, prod);
        }
        return acc;
    }
};

// Product of rings over one base field.  Fresh variables: factor i's
// variable v becomes v_i, plus idempotent generators e0, e1, ...
inline RingProductResult ring_product(const std::vector<AffineRing>& factors,
                                      const ComputeLimits& limits = global_limits()) {
    if (factors.empty()) throw ValueError("ring_product: needs at least one factor");
    const FieldTag field = factors[0].field();
    for (const auto& f : factors)
        if (f.field() != field) throw ValueError("ring_product: factors over different fields");

    std::set<std::string> taken;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> var_pos(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (const auto& v : factors[i].vars()) {
            var_pos[i].push_back(names.size());
            names.push_back(fresh_name(v + "_" + std::to_string(i), taken));
        }
    }
    std::vector<std::size_t> e_pos(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        e_pos[i] = names.size();
        names.push_back(fresh_name("e" + std::to_string(i), taken));
    }
    const std::size_t N = names.size();

    auto var = [&](std::size_t pos) { return Polynomial::variable(field, N, pos); };
    std::vector<Polynomial> rels;

    // factor relations, localized at the factor idempotent so that constant
    // terms behave: g becomes (g - g(0)) + g(0)*e_i
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (const auto& g : factors[i].groebner().elems) {
            std::vector<std::size_t> to(factors[i].nvars());
            for (std::size_t j = 0; j < to.size(); ++j) to[j] = var_pos[i][j];
            Polynomial gr = remap_variables(g, to, N);
            Scalar g0 = gr.constant_coefficient();
            if (!g0.is_zero())
                gr = gr - Polynomial::constant(g0, N) + Polynomial::constant(g0, N) * var(e_pos[i]);
            rels.push_back(gr);
        }
    }
    // idempotent orthogonality and partition of unity
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j) rels.push_back(var(e_pos[i]) * var(e_pos[j]));
    Polynomial sum = Polynomial::zero(field, N);
    for (std::size_t i = 0; i < factors.size(); ++i) sum += var(e_pos[i]);
    rels.push_back(sum - Polynomial::one(field, N));
    // e_i kills the other factors' coordinates, and fixes its own
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = 0; j < factors.size(); ++j) {
            for (std::size_t pos : var_pos[j]) {
                if (i == j) continue;
                rels.push_back(var(e_pos[i]) * var(pos));
            }
        }
        for (std::size_t pos : var_pos[i])
            rels.push_back((Polynomial::one(field, N) - var(e_pos[i])) * var(pos));
    }

    RingProductResult out;
    out.product = AffineRing(field, names, rels, limits);
    out.factors = factors;
    for (std::size_t i = 0; i < factors.size(); ++i)
        out.idempotents.push_back(RingElement::variable(out.product, e_pos[i]));
    out.var_images.resize(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t pos : var_pos[i])
            out.var_images[i].push_back(RingElement::variable(out.product, pos));
    return out;
}

// -----------------------------------------------------------------------
// subalgebra presentations
// -----------------------------------------------------------------------

struct SubalgebraResult {
    AffineRing ring;                      // k[T_0..T_{m-1}] / kernel
    RingMap inclusion;                    // ring -> S
    std::vector<RingElement> rep_of_input;  // each input element, inside `ring`
};

// Presentation of the subalgebra of S generated by the given elements.
// Constant and duplicate inputs do not get generators of their own but are
// still representable (see rep_of_input).
inline SubalgebraResult subalgebra_presentation(const AffineRing& S,
                                                const std::vector<RingElement>& elements,
                                                const std::string& stem = "T",
                                                const ComputeLimits& limits = global_limits()) {
    for (const auto& e : elements)
        if (e.ring() != S) throw ValueError("subalgebra_presentation: element outside the ring");

    std::vector<RingElement> kept;
    enum class Kind { Generator, Constant, Duplicate };
    struct Where {
        Kind kind;
        std::size_t index;  // generator index or twin input index
    };
    std::vector<Where> where(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].is_constant()) {
            where[i] = {Kind::Constant, 0};
            continue;
        }
        bool dup = false;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (kept[k] == elements[i]) {
                where[i] = {Kind::Duplicate, k};
                dup = true;
                break;
            }
        }
        if (!dup) {
            where[i] = {Kind::Generator, kept.size()};
            kept.push_back(elements[i]);
        }
    }

    const FieldTag field = S.field();
    const std::size_t s = S.nvars();
    const std::size_t m = kept.size();

    std::set<std::string> taken;
    std::vector<std::string> joined_names;
    for (const auto& n : S.vars()) joined_names.push_back(fresh_name(n, taken));
    std::vector<std::string> tnames;
    for (std::size_t j = 0; j < m; ++j) {
        tnames.push_back(fresh_name(stem + std::to_string(j), taken));
        joined_names.push_back(tnames.back());
    }

    auto embed_S = [&](const Polynomial& p) {
        std::vector<std::size_t> to(s);
        for (std::size_t i = 0; i < s; ++i) to[i] = i;
        return remap_variables(p, to, s + m);
    };
    std::vector<Polynomial> gens;
    for (const auto& q : S.groebner().elems) gens.push_back(embed_S(q));
    for (std::size_t j = 0; j < m; ++j)
        gens.push_back(Polynomial::variable(field, s + m, s + j) - embed_S(kept[j].rep()));

    std::vector<Polynomial> elim = eliminate_first(gens, s, limits);
    std::vector<Polynomial> defining;
    for (const auto& p : elim) {
        std::vector<std::size_t> to(s + m, SIZE_MAX);
        for (std::size_t j = 0; j < m; ++j) to[s + j] = j;
        defining.push_back(remap_variables(p, to, m));
    }

    SubalgebraResult out;
    out.ring = AffineRing(field, tnames, defining, limits);
    std::vector<RingElement> incl_images;
    for (std::size_t j = 0; j < m; ++j) incl_images.push_back(kept[j]);
    out.inclusion = RingMap(out.ring, S, std::move(incl_images));
    out.rep_of_input.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        switch (where[i].kind) {
            case Kind::Generator:
                out.rep_of_input.push_back(RingElement::variable(out.ring, where[i].index));
                break;
            case Kind::Constant:
                out.rep_of_input.push_back(
                    RingElement::constant(out.ring, elements[i].rep().constant_coefficient()));
                break;
            case Kind::Duplicate:
                out.rep_of_input.push_back(RingElement::variable(out.ring, where[i].index));
                break;
        }
    }
    return out;
}

// -----------------------------------------------------------------------
// pullback (fiber product) in the module-finite setting
// -----------------------------------------------------------------------

struct PullbackResult {
    AffineRing ring;     // presentation of the fiber product A x_C B
    RingMap to_A;
    RingMap to_B;
    RingMap from_base;   // the base ring R maps into the pullback
};

// Pullback of  A --phi->> C <-psi-- B  over an explicit base R that makes A
// and B module-finite.  Since phi is surjective the fiber product P sits in
//   0 -> ker(phi) -> P -> B -> 0,
// so P is generated inside A x B by the base pairs, one lift (a_j, b_j) per
// B-variable, and the pairs (m * k, 0) with k a kernel generator and m a
// module basis element of A over R.
inline PullbackResult pullback(const RingMap& phi, const RingMap& psi, const RingMap& alpha,
                               const RingMap& beta, const std::string& stem = "T",
                               const ComputeLimits& limits = global_limits()) {
    const AffineRing& A = phi.source();
    const AffineRing& B = psi.source();
    const AffineRing& C = phi.target();
    const AffineRing& R = alpha.source();
    if (psi.target() != C) throw ValueError("pullback: the two maps have different targets");
    if (alpha.target() != A || beta.target() != B || beta.source() != R)
        throw ValueError("pullback: base maps do not match the corner rings");
    {
        RingMap through_A = compose(phi, alpha), through_B = compose(psi, beta);
        if (!(through_A == through_B))
            throw ValueError("pullback: the base square does not commute");
    }
    if (!is_finite(beta, limits)) throw NotFinite("pullback: B is not module-finite over the base");

    FiniteMapData pfA = pushforward(alpha, limits);  // throws NotFinite when A is not finite over R
    IdealHandle kphi = kernel(phi, limits);

    // lifts of the B-variables through the surjection phi
    mapdetail::MapGraph phi_graph = mapdetail::build_graph(phi, limits);
    for (std::size_t v = 0; v < phi_graph.t; ++v) {
        Polynomial xv = Polynomial::variable(phi_graph.field, phi_graph.t + phi_graph.s, v);
        if (!normal_form(xv, phi_graph.gb).free_of_first(phi_graph.t))
            throw NotSurjective("pullback: phi must be surjective");
    }
    auto lift_through_phi = [&](const RingElement& c) {
        Polynomial nf = normal_form(phi_graph.embed_target(c.rep()), phi_graph.gb);
        invariant(nf.free_of_first(phi_graph.t), "pullback: lift through phi failed");
        return RingElement(A, phi_graph.restrict_source(nf));
    };

    RingProductResult prod = ring_product({A, B}, limits);
    const RingElement& eA = prod.idempotents[0];
    const RingElement& eB = prod.idempotents[1];

    auto pair_element = [&](const RingElement& a, const RingElement& b) {
        return eA * prod.transport(0, a) + eB * prod.transport(1, b);
    };

    std::vector<RingElement> gens;
    auto is_redundant = [&](const RingElement& g) {
        if (g.is_constant()) return true;
        for (const auto& old : gens)
            if (old == g) return true;
        // a product of two elements already present generates nothing new
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i; j < gens.size(); ++j)
                if (gens[i] * gens[j] == g) return true;
        return false;
    };
    auto add_pair = [&](const RingElement& a, const RingElement& b, bool filter_products) {
        invariant(phi(a) == psi(b), "pullback: generator pair does not agree in C");
        RingElement g = pair_element(a, b);
        if (filter_products ? is_redundant(g) : g.is_constant()) return false;
        if (!filter_products) {
            for (const auto& old : gens)
                if (old == g) return false;
        }
        gens.push_back(g);
        return true;
    };

    // base pairs first: the linear relations of the presentation then solve
    // for these combined coordinates and minimization keeps the kernel part
    std::vector<std::size_t> base_pair_index(R.nvars(), SIZE_MAX);
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        RingElement a = alpha.images()[i], b = beta.images()[i];
        RingElement g = pair_element(a, b);
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (gens[k] == g) base_pair_index[i] = k;
        if (base_pair_index[i] == SIZE_MAX && !g.is_constant()) {
            add_pair(a, b, false);
            base_pair_index[i] = gens.size() - 1;
        }
    }
    for (std::size_t j = 0; j < B.nvars(); ++j) {
        RingElement bj = RingElement::variable(B, j);
        add_pair(lift_through_phi(psi(bj)), bj, false);
    }
    for (const auto& k : kphi.gens) add_pair(k, RingElement::zero(B), true);
    for (const auto& m : pfA.basis) {
        if (m.is_one()) continue;
        for (const auto& k : kphi.gens) add_pair(m * k, RingElement::zero(B), true);
    }

    SubalgebraResult sub = subalgebra_presentation(prod.product, gens, stem, limits);

    // projections of the product onto the corner rings
    auto projection = [&](std::size_t which) {
        const AffineRing& target = which == 0 ? A : B;
        std::vector<RingElement> imgs;
        for (std::size_t f = 0; f < 2; ++f) {
            for (std::size_t j = 0; j < prod.factors[f].nvars(); ++j) {
                if (f == which)
                    imgs.push_back(RingElement::variable(target, j));
                else
                    imgs.push_back(RingElement::zero(target));
            }
        }
        imgs.push_back(which == 0 ? RingElement::one(target) : RingElement::zero(target));
        imgs.push_back(which == 0 ? RingElement::zero(target) : RingElement::one(target));
        return RingMap(prod.product, target, std::move(imgs));
    };

    PullbackResult out;
    out.ring = sub.ring;
    out.to_A = compose(projection(0), sub.inclusion);
    out.to_B = compose(projection(1), sub.inclusion);
    std::vector<RingElement> base_images;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        if (base_pair_index[i] == SIZE_MAX) {
            base_images.push_back(
                RingElement::constant(out.ring, alpha.images()[i].rep().constant_coefficient()));
        } else {
            base_images.push_back(sub.rep_of_input[base_pair_index[i]]);
        }
    }
    out.from_base = RingMap(R, out.ring, std::move(base_images));

    invariant(compose(phi, out.to_A) == compose(psi, out.to_B),
              "pullback: projections disagree after composing to C");
    return out;
}

}  // namespace seminorm

#endif
