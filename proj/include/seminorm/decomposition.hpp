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

#ifndef SEMINORM_DECOMPOSITION_HPP
#define SEMINORM_DECOMPOSITION_HPP

#include <deque>
#include <random>

#include "factor.hpp"
#include "ideal.hpp"

namespace seminorm {

struct DecompositionContext {
    std::uint64_t seed = 0;
};

// Minimal primes with a best-effort primality certificate per component.
struct MinimalPrimeSet {
    std::vector<IdealHandle> primes;
    std::vector<bool> certified;

    bool all_certified() const {
        for (bool c : certified)
            if (!c) return false;
        return true;
    }
};

namespace decompdetail {

// standard monomials of a zero-dimensional initial ideal, grevlex ascending
inline std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars,
                                                std::size_t cap) {
    auto less = [](const Monomial& a, const Monomial& b) { return cmp_grevlex(a, b) < 0; };
    std::set<Monomial, decltype(less)> seen(less);
    std::deque<Monomial> queue;
    auto is_standard = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return false;
        return true;
    };
    Monomial one = Monomial::one(nvars);
    if (!is_standard(one)) return {};
    seen.insert(one);
    queue.push_back(one);
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < nvars; ++v) {
            Monomial next = m * Monomial::variable(nvars, v);
            if (seen.count(next) || !is_standard(next)) continue;
            seen.insert(next);
            queue.push_back(next);
            if (seen.size() > cap)
                throw ResourceLimitExceeded("standard monomial basis exceeds the supported size");
        }
    }
    return std::vector<Monomial>(seen.begin(), seen.end());
}

inline std::vector<Scalar> coords(const Polynomial& nf, const std::vector<Monomial>& basis,
                                  const FieldTag& field) {
    std::vector<Scalar> v(basis.size(), Scalar::zero(field));
    for (const auto& t : nf.terms()) {
        bool placed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i] == t.mono) {
                v[i] = t.coeff;
                placed = true;
                break;
            }
        }
        if (!placed) throw InvariantViolation("normal form leaves the standard monomial span");
    }
    return v;
}

// monic minimal polynomial of h in the zero-dimensional quotient, as dense
// coefficients c_0..c_d with c_d = 1
inline std::vector<Scalar> minimal_polynomial(const Polynomial& h, const GroebnerBasis& gb,
                                              const std::vector<Monomial>& basis,
                                              const FieldTag& field) {
    struct Row {
        std::vector<Scalar> vec;
        std::vector<Scalar> combo;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    Polynomial power = Polynomial::one(field, h.nvars());
    for (std::size_t k = 0;; ++k) {
        if (k > basis.size()) throw InvariantViolation("minimal polynomial exceeds the space dimension");
        std::vector<Scalar> v = coords(normal_form(power, gb), basis, field);
        std::vector<Scalar> combo(k + 1, Scalar::zero(field));
        combo[k] = Scalar::one(field);
        for (const auto& row : rows) {
            Scalar c = v[row.pivot];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * row.vec[i];
            for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] -= c * row.combo[i];
        }
        bool zero = true;
        for (const auto& c : v)
            if (!c.is_zero()) {
                zero = false;
                break;
            }
        if (zero) return combo;  // monic by construction
        std::size_t pivot = 0;
        while (v[pivot].is_zero()) ++pivot;
        Scalar inv = v[pivot].inverse();
        for (auto& c : v) c *= inv;
        for (auto& c : combo) c *= inv;
        rows.push_back({std::move(v), std::move(combo), pivot});
        power = normal_form(power * h, gb);
    }
}

inline Polynomial evaluate_at(const std::vector<Scalar>& dense, const Polynomial& h) {
    Polynomial acc = Polynomial::zero(h.field(), h.nvars());
    Polynomial power = Polynomial::one(h.field(), h.nvars());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (!dense[i].is_zero()) acc += power.times_scalar(dense[i]);
        if (i + 1 < dense.size()) power *= h;
    }
    return acc;
}

inline std::vector<Polynomial> saturate_poly(const std::vector<Polynomial>& gens, const Polynomial& f,
                                             const FieldTag& field, std::size_t n,
                                             const ComputeLimits& limits) {
    using namespace idealdetail;
    Polynomial t = Polynomial::variable(field, n + 1, 0);
    std::vector<Polynomial> ext;
    for (const auto& g : gens) ext.push_back(with_tag(g));
    ext.push_back(t * with_tag(f) - Polynomial::one(field, n + 1));
    std::vector<Polynomial> elim = eliminate_first(ext, 1, limits);
    std::vector<Polynomial> back;
    back.reserve(elim.size());
    for (const auto& p : elim) back.push_back(without_tag(p));
    return back;
}

struct Component {
    GroebnerBasis gb;
    bool certified;
};

}  // namespace decompdetail

// Minimal primes by recursive factor splitting: whenever a basis element
// factors, branch on each irreducible factor (saturating earlier siblings
// away); zero-dimensional leaves split along univariate eliminants, with a
// random-linear-form pass to certify residue fields.  Components that resist
// certification are returned with certified = false.
inline MinimalPrimeSet minimal_primes(const IdealHandle& I, const DecompositionContext& ctx = {},
                                      const ComputeLimits& limits = global_limits()) {
    using namespace decompdetail;
    const FieldTag field = I.ring.field();
    const std::size_t n = I.ring.nvars();
    std::mt19937_64 rng(ctx.seed ^ 0x6a09e667f3bcc909ull);

    std::deque<GroebnerBasis> queue;
    queue.push_back(lifted_groebner(I, limits));
    std::vector<Component> leaves;

    auto enqueue_branches = [&](const GroebnerBasis& J, const std::vector<Polynomial>& factors) {
        Polynomial sibling_product = Polynomial::one(field, n);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            std::vector<Polynomial> gens = J.elems;
            gens.push_back(factors[i]);
            if (i > 0) gens = saturate_poly(gens, sibling_product, field, n, limits);
            queue.push_back(buchberger(gens, MonomialOrder::grevlex(), limits));
            sibling_product *= factors[i];
        }
    };

    while (!queue.empty()) {
        GroebnerBasis J = std::move(queue.front());
        queue.pop_front();
        if (J.contains_one()) continue;

        // factor splitting on basis elements
        bool split = false;
        for (const auto& g : J.elems) {
            Factorization F = factor(g, ctx.seed, limits);
            if (F.factors.size() > 1 || (F.factors.size() == 1 && F.factors[0].second > 1)) {
                std::vector<Polynomial> parts;
                for (const auto& [p, m] : F.factors) parts.push_back(p);
                enqueue_branches(J, parts);
                split = true;
                break;
            }
        }
        if (split) continue;

        int dim = dimension_from_leads(J.leads, n);
        if (dim < 0) continue;

        if (dim == 0 && n > 0) {
            std::vector<Monomial> basis = standard_monomials(J.leads, n, limits.max_pushforward_rank);
            const std::size_t vdim = basis.size();
            // split along each variable's eliminant
            bool branched = false;
            std::vector<std::size_t> minpoly_deg(n, 0);
            for (std::size_t v = 0; v < n && !branched; ++v) {
                Polynomial xv = Polynomial::variable(field, n, v);
                std::vector<Scalar> mp = minimal_polynomial(xv, J, basis, field);
                minpoly_deg[v] = mp.size() - 1;
                Factorization F = factor(facdetail::from_dense(mp, field, n, v), ctx.seed, limits);
                if (F.factors.size() > 1 || F.factors[0].second > 1) {
                    std::vector<Polynomial> parts;
                    for (const auto& [p, m] : F.factors) parts.push_back(p);
                    enqueue_branches(J, parts);
                    branched = true;
                }
            }
            if (branched) continue;

            bool certified = false;
            for (std::size_t v = 0; v < n && !certified; ++v)
                if (minpoly_deg[v] == vdim) certified = true;

            // primitive-element attempts with random linear forms
            for (unsigned attempt = 0; attempt < 8 && !certified && !branched; ++attempt) {
                Polynomial ell = Polynomial::zero(field, n);
                for (std::size_t v = 0; v < n; ++v) {
                    long c = field.is_rationals() ? static_cast<long>(rng() % 17)
                                                  : static_cast<long>(rng() % field.characteristic());
                    if (c) ell += Polynomial::variable(field, n, v).times_scalar(Scalar::from_int(field, c));
                }
                if (ell.is_zero() || ell.is_constant()) continue;
                std::vector<Scalar> mp = minimal_polynomial(ell, J, basis, field);
                // express the minimal polynomial back in the linear form
                Polynomial mp_at_var = facdetail::from_dense(mp, field, n, 0);
                Factorization F = factor(mp_at_var, ctx.seed, limits);
                if (F.factors.size() > 1 || F.factors[0].second > 1) {
                    std::vector<Polynomial> parts;
                    for (const auto& [p, m] : F.factors) {
                        std::vector<Scalar> dense = facdetail::to_dense(p, 0);
                        parts.push_back(evaluate_at(dense, ell));
                    }
                    enqueue_branches(J, parts);
                    branched = true;
                } else if (mp.size() - 1 == vdim) {
                    certified = true;
                }
            }
            if (branched) continue;
            leaves.push_back({std::move(J), certified});
            continue;
        }

        // positive-dimensional leaf with every element irreducible
        bool linear = true;
        for (const auto& g : J.elems)
            if (g.total_degree() > 1) linear = false;
        bool certified = linear || J.elems.size() <= 1;
        leaves.push_back({std::move(J), certified});
    }

    // drop components that contain another component
    std::vector<bool> drop(leaves.size(), false);
    auto contains_gb = [&](const GroebnerBasis& big, const GroebnerBasis& small) {
        for (const auto& g : small.elems)
            if (!in_ideal(g, big)) return false;
        return true;
    };
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        for (std::size_t j = 0; j < leaves.size() && !drop[i]; ++j) {
            if (i == j || drop[j]) continue;
            if (contains_gb(leaves[i].gb, leaves[j].gb) &&
                (!contains_gb(leaves[j].gb, leaves[i].gb) || j < i))
                drop[i] = true;
        }
    }
    std::vector<Component> kept;
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(leaves[i]));

    std::sort(kept.begin(), kept.end(), [](const Component& a, const Component& b) {
        if (a.gb.elems.size() != b.gb.elems.size()) return a.gb.elems.size() < b.gb.elems.size();
        for (std::size_t i = 0; i < a.gb.elems.size(); ++i) {
            if (a.gb.elems[i] != b.gb.elems[i]) return canonical_less(a.gb.elems[i], b.gb.elems[i]);
        }
        return false;
    });

    MinimalPrimeSet out;
    for (auto& leaf : kept) {
        std::vector<RingElement> gens;
        for (const auto& g : leaf.gb.elems) {
            RingElement e(I.ring, g);
            if (!e.is_zero()) gens.push_back(e);
        }
        out.primes.push_back(make_ideal(I.ring, std::move(gens)));
        out.certified.push_back(leaf.certified);
    }

    // audit: every component contains I, and when everything is certified the
    // intersection is exactly the radical
    for (const auto& P : out.primes)
        for (const auto& g : I.gens)
            invariant(ideal_contains(P, g, limits), "minimal prime does not contain the input ideal");
    if (out.all_certified() && !out.primes.empty()) {
        IdealHandle meet = out.primes[0];
        for (std::size_t i = 1; i < out.primes.size(); ++i) meet = intersect(meet, out.primes[i], limits);
        for (const auto& g : meet.gens)
            invariant(radical_membership(g, I, limits),
                      "intersection of minimal primes exceeds the radical");
    }
    return out;
}

// radical(I) as the intersection of the minimal primes.  Every generator of
// the intersection is verified to lie in the radical by the Rabinowitsch
// test; if a component resisted certification and the verification fails,
// the decomposition was genuinely incomplete.
inline IdealHandle radical(const IdealHandle& I, const DecompositionContext& ctx = {},
                           const ComputeLimits& limits = global_limits()) {
    MinimalPrimeSet mp = minimal_primes(I, ctx, limits);
    if (mp.primes.empty()) return unit_ideal(I.ring);
    IdealHandle acc = mp.primes[0];
    for (std::size_t i = 1; i < mp.primes.size(); ++i) acc = intersect(acc, mp.primes[i], limits);
    acc = trim(acc, limits);
    for (const auto& g : acc.gens) {
        if (!radical_membership(g, I, limits)) {
            if (!mp.all_certified())
                throw IncompleteDecomposition(
                    "radical: intersection of the uncertified components exceeds the radical");
            throw InvariantViolation("radical: intersection of minimal primes exceeds the radical");
        }
    }
    return acc;
}

// reducedness of R = P/Q: Q is radical in the ambient polynomial ring
inline bool is_reduced_ring(const AffineRing& R, const DecompositionContext& ctx = {},
                            const ComputeLimits& limits = global_limits()) {
    if (R.is_zero_ring()) return false;
    if (R.groebner().elems.empty()) return true;
    AffineRing ambient(R.field(), R.vars(), {});
    std::vector<RingElement> gens;
    for (const auto& q : R.groebner().elems) gens.push_back(RingElement(ambient, q));
    IdealHandle Q = make_ideal(ambient, std::move(gens));
    IdealHandle rad = radical(Q, ctx, limits);
    return ideals_equal(Q, rad, limits);
}

}  // namespace seminorm

#endif
