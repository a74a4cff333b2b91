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

#ifndef SEMINORM_MODULE_GB_HPP
#define SEMINORM_MODULE_GB_HPP

#include <map>
#include <set>
#include <vector>

#include "groebner.hpp"

namespace seminorm {
namespace modgb {

// Module monomial: a monomial sitting in one free-module component.
struct ModMono {
    Monomial mono;
    std::uint32_t comp;

    friend bool operator==(const ModMono& a, const ModMono& b) {
        return a.comp == b.comp && a.mono == b.mono;
    }
};

// Components below `big_comps` form an eliminated block: any term there
// outranks any term in the remaining components.  Within a block, terms
// compare by the monomial order first, then by component, which keeps
// elements whose lead avoids the big block (and, for block monomial orders,
// the eliminated variables) entirely inside the small block.
struct ModuleOrder {
    std::size_t big_comps;
    MonomialOrder mono;

    int cmp(const ModMono& a, const ModMono& b) const {
        bool abig = a.comp < big_comps, bbig = b.comp < big_comps;
        if (abig != bbig) return abig ? 1 : -1;
        int c = mono.cmp(a.mono, b.mono);
        if (c) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }
};

struct ModMonoGreater {
    ModuleOrder order;
    bool operator()(const ModMono& a, const ModMono& b) const { return order.cmp(a, b) > 0; }
};

using ModMap = std::map<ModMono, Scalar, ModMonoGreater>;

// Module element as a dense-by-component polynomial vector.
using Column = std::vector<Polynomial>;

struct ModElem {
    Column coords;  // one polynomial per component

    bool is_zero() const {
        for (const auto& p : coords)
            if (!p.is_zero()) return false;
        return true;
    }
};

inline ModMono lead_mono(const ModElem& e, const ModuleOrder& order) {
    ModMono best;
    bool found = false;
    for (std::uint32_t c = 0; c < e.coords.size(); ++c) {
        for (const auto& t : e.coords[c].terms()) {
            ModMono m{t.mono, c};
            if (!found || order.cmp(m, best) > 0) {
                best = m;
                found = true;
            }
        }
    }
    if (!found) throw InvariantViolation("lead of zero module element");
    return best;
}

inline Scalar coeff_at(const ModElem& e, const ModMono& m) {
    for (const auto& t : e.coords[m.comp].terms())
        if (t.mono == m.mono) return t.coeff;
    return Scalar::zero(e.coords[m.comp].field());
}

inline ModElem times_term(const ModElem& e, const Scalar& c, const Monomial& m) {
    ModElem r;
    r.coords.reserve(e.coords.size());
    for (const auto& p : e.coords) r.coords.push_back(p.times_term(c, m));
    return r;
}

inline ModElem sub(const ModElem& a, const ModElem& b) {
    ModElem r;
    r.coords.reserve(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i) r.coords.push_back(a.coords[i] - b.coords[i]);
    return r;
}

inline ModElem primitive(const ModElem& e, const FieldTag& field, const ModuleOrder& order) {
    if (field.is_rationals()) {
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& p : e.coords) {
            for (const auto& t : p.terms()) {
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
            }
        }
        if (num_gcd == 0) return e;
        mpq_class factor(den_lcm, num_gcd);
        factor.canonicalize();
        Scalar c = Scalar::from_mpq(field, factor);
        ModElem r = times_term(e, c, Monomial::one(e.coords[0].nvars()));
        if (coeff_at(r, lead_mono(r, order)).rational() < 0)
            r = times_term(r, Scalar::from_int(field, -1), Monomial::one(e.coords[0].nvars()));
        return r;
    }
    Scalar lc = coeff_at(e, lead_mono(e, order));
    return times_term(e, lc.inverse(), Monomial::one(e.coords[0].nvars()));
}

// Full reduction of a module element by a list of reducers; the result is
// determined up to a nonzero scalar (content-stripped over QQ).
inline ModElem reduce_full(const ModElem& f, const std::vector<ModElem>& basis,
                           const std::vector<ModMono>& leads, const std::vector<Scalar>& lead_coeffs,
                           const ModuleOrder& order, const FieldTag& field, std::size_t nvars) {
    ModElem work = field.is_rationals() ? primitive(f, field, order) : f;
    unsigned steps = 0;
    while (!work.is_zero()) {
        ModMono lm = lead_mono(work, order);
        Scalar lc = coeff_at(work, lm);
        std::size_t hit = basis.size();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (leads[i].comp == lm.comp && leads[i].mono.divides(lm.mono)) {
                hit = i;
                break;
            }
        }
        if (hit == basis.size()) break;  // lead irreducible: move on below
        Monomial shift = leads[hit].mono.divide_into(lm.mono);
        if (field.is_rationals()) {
            // lc(g) * work - lc * shift * g stays integral
            work = sub(times_term(work, lead_coeffs[hit], Monomial::one(nvars)),
                       times_term(basis[hit], lc, shift));
            if (++steps >= 16) {
                steps = 0;
                work = primitive(work, field, order);
            }
        } else {
            work = sub(work, times_term(basis[hit], lc / lead_coeffs[hit], shift));
        }
        // full reduction here would also rewrite tail terms; for syzygy
        // extraction only lead reduction to irreducibility is required, and
        // once the lead is irreducible the element joins the basis as-is.
    }
    if (!work.is_zero() && field.is_rationals()) work = primitive(work, field, order);
    return work;
}

struct ModPair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
};

struct ModPairCmp {
    MonomialOrder order;
    bool operator()(const ModPair& a, const ModPair& b) const {
        if (a.lcm.deg() != b.lcm.deg()) return a.lcm.deg() < b.lcm.deg();
        int c = order.cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Buchberger for submodules of a free module.  S-pairs form only between
// elements with the same leading component; the coprimality shortcut is not
// valid for modules and is omitted.
inline std::vector<ModElem> module_buchberger(std::vector<ModElem> gens, const ModuleOrder& order,
                                              const FieldTag& field, std::size_t nvars,
                                              const ComputeLimits& limits) {
    std::vector<ModElem> basis;
    std::vector<ModMono> leads;
    std::vector<Scalar> lead_coeffs;
    std::set<ModPair, ModPairCmp> pairs{ModPairCmp{order.mono}};

    auto gm_add = [&](const ModElem& h) {
        const std::size_t t = basis.size();
        ModMono hm = lead_mono(h, order);

        for (auto it = pairs.begin(); it != pairs.end();) {
            if (leads[it->i].comp == hm.comp && hm.mono.divides(it->lcm) &&
                leads[it->i].mono.lcm(hm.mono) != it->lcm && leads[it->j].mono.lcm(hm.mono) != it->lcm)
                it = pairs.erase(it);
            else
                ++it;
        }

        std::vector<ModPair> cand;
        for (std::size_t i = 0; i < t; ++i) {
            if (leads[i].comp != hm.comp) continue;
            cand.push_back({i, t, leads[i].mono.lcm(hm.mono), hm.comp});
        }
        std::vector<bool> dead(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || dead[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm) {
                    dead[a] = true;
                    break;
                }
            }
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            for (std::size_t b = a + 1; b < cand.size(); ++b)
                if (!dead[b] && cand[b].lcm == cand[a].lcm) dead[b] = true;
        }
        for (std::size_t a = 0; a < cand.size(); ++a)
            if (!dead[a]) pairs.insert(cand[a]);

        basis.push_back(h);
        leads.push_back(hm);
        lead_coeffs.push_back(coeff_at(h, hm));
        if (basis.size() > limits.max_module_basis)
            throw ResourceLimitExceeded("module Groebner basis exceeded the element ceiling");
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        ModElem r = reduce_full(g, basis, leads, lead_coeffs, order, field, nvars);
        if (!r.is_zero()) gm_add(r);
    }

    while (!pairs.empty()) {
        ModPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const ModElem& f = basis[p.i];
        const ModElem& g = basis[p.j];
        ModElem s = sub(times_term(f, lead_coeffs[p.j], leads[p.i].mono.divide_into(p.lcm)),
                        times_term(g, lead_coeffs[p.i], leads[p.j].mono.divide_into(p.lcm)));
        if (s.is_zero()) continue;
        ModElem r = reduce_full(s, basis, leads, lead_coeffs, order, field, nvars);
        if (!r.is_zero()) gm_add(r);
    }
    return basis;
}

}  // namespace modgb

// Generators of the syzygy-like module
//   { h in P^s : sum_k h_k * cols[k]  in  span(rels) + ideal_gens * P^t }
// computed by tracking unit vectors through a module basis that eliminates
// the first t components.
inline std::vector<std::vector<Polynomial>> syzygy_generators(
    const std::vector<std::vector<Polynomial>>& cols, const std::vector<std::vector<Polynomial>>& rels,
    const std::vector<Polynomial>& ideal_gens, const FieldTag& field, std::size_t nvars, std::size_t t,
    const ComputeLimits& limits = global_limits()) {
    using namespace modgb;
    const std::size_t s = cols.size();
    const std::size_t rank = t + s;
    ModuleOrder order{t, MonomialOrder::grevlex()};

    auto pad = [&](const std::vector<Polynomial>& top, std::size_t track) {
        ModElem e;
        e.coords.assign(rank, Polynomial::zero(field, nvars));
        for (std::size_t i = 0; i < top.size(); ++i) e.coords[i] = top[i];
        if (track < s) e.coords[t + track] = Polynomial::one(field, nvars);
        return e;
    };

    std::vector<ModElem> gens;
    for (std::size_t k = 0; k < s; ++k) gens.push_back(pad(cols[k], k));
    for (const auto& r : rels) gens.push_back(pad(r, s));
    for (const auto& q : ideal_gens) {
        for (std::size_t i = 0; i < t; ++i) {
            ModElem e;
            e.coords.assign(rank, Polynomial::zero(field, nvars));
            e.coords[i] = q;
            gens.push_back(std::move(e));
        }
    }

    auto basis = module_buchberger(std::move(gens), order, field, nvars, limits);

    std::vector<std::vector<Polynomial>> out;
    for (const auto& e : basis) {
        bool small_only = true;
        for (std::size_t i = 0; i < t && small_only; ++i)
            if (!e.coords[i].is_zero()) small_only = false;
        if (!small_only) continue;
        std::vector<Polynomial> vec(e.coords.begin() + t, e.coords.end());
        out.push_back(std::move(vec));
    }
    return out;
}

// Generators of { h in k[x_t..x_{n-1}]^B : sum_mu h_mu * basis_polys[mu] in ideal(ideal_gens) },
// the coefficient syzygies of a pushforward basis.  Requires the first
// `eliminated_vars` ambient variables to be the ones excluded from h.
inline std::vector<std::vector<Polynomial>> coefficient_syzygies(
    const std::vector<Polynomial>& basis_polys, const std::vector<Polynomial>& ideal_gens,
    std::size_t eliminated_vars, const FieldTag& field, std::size_t nvars,
    const ComputeLimits& limits = global_limits()) {
    using namespace modgb;
    const std::size_t b = basis_polys.size();
    const std::size_t rank = 1 + b;
    ModuleOrder order{1, MonomialOrder::block_elim(eliminated_vars)};

    std::vector<ModElem> gens;
    for (std::size_t k = 0; k < b; ++k) {
        ModElem e;
        e.coords.assign(rank, Polynomial::zero(field, nvars));
        e.coords[0] = basis_polys[k];
        e.coords[1 + k] = Polynomial::one(field, nvars);
        gens.push_back(std::move(e));
    }
    for (const auto& q : ideal_gens) {
        ModElem e;
        e.coords.assign(rank, Polynomial::zero(field, nvars));
        e.coords[0] = q;
        gens.push_back(std::move(e));
    }

    auto basis = module_buchberger(std::move(gens), order, field, nvars, limits);

    std::vector<std::vector<Polynomial>> out;
    for (const auto& e : basis) {
        if (!e.coords[0].is_zero()) continue;
        bool clean = true;
        for (std::size_t k = 1; k < rank && clean; ++k)
            if (!e.coords[k].free_of_first(eliminated_vars)) clean = false;
        if (!clean) continue;
        std::vector<Polynomial> vec(e.coords.begin() + 1, e.coords.end());
        out.push_back(std::move(vec));
    }
    return out;
}

}  // namespace seminorm

#endif
