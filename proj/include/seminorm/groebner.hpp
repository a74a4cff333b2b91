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

#ifndef SEMINORM_GROEBNER_HPP
#define SEMINORM_GROEBNER_HPP

#include <map>
#include <set>
#include <vector>

#include "limits.hpp"
#include "polynomial.hpp"

namespace seminorm {

// The unique reduced Groebner basis of an ideal for a monomial order:
// elements are monic, no leading monomial divides another, every tail term
// is irreducible, and the sequence is sorted ascending by leading monomial.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elems;
    std::vector<Monomial> leads;  // leading monomials, parallel to elems

    bool is_trivial() const { return elems.empty(); }
    bool contains_one() const { return elems.size() == 1 && elems[0].is_one(); }
};

namespace gbdetail {

struct WorkGreater {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.cmp(a, b) > 0; }
};

using WorkMap = std::map<Monomial, Scalar, WorkGreater>;

inline void add_into(WorkMap& acc, const Polynomial& p, const Scalar& c, const Monomial& m) {
    for (const auto& t : p.terms()) {
        Monomial mono = t.mono * m;
        Scalar coeff = t.coeff * c;
        auto it = acc.find(mono);
        if (it == acc.end()) {
            if (!coeff.is_zero()) acc.emplace(std::move(mono), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

inline void scale_map(WorkMap& m, const Scalar& c) {
    for (auto& [mono, coeff] : m) coeff *= c;
}

inline mpz_class integer_content(const WorkMap& a, const WorkMap& b) {
    mpz_class g = 0;
    for (const auto& [m, c] : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.rational().get_num_mpz_t());
    for (const auto& [m, c] : b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.rational().get_num_mpz_t());
    return g;
}

inline Polynomial from_workmap(const FieldTag& f, std::size_t nvars, const WorkMap& m) {
    std::vector<Term> ts;
    ts.reserve(m.size());
    for (const auto& [mono, coeff] : m) ts.push_back({coeff, mono});
    return Polynomial::from_terms(f, nvars, std::move(ts));
}

// Full multivariate division.  In exact mode the divisors must be monic and
// the remainder is the canonical normal form.  In scaled mode the remainder
// is only determined up to a nonzero scalar; over QQ the computation then
// stays in integers with periodic content removal.
inline Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& divisors,
                              const std::vector<Monomial>& divisor_leads, const MonomialOrder& order,
                              bool scaled) {
    if (f.is_zero()) return f;
    const FieldTag field = f.field();
    const std::size_t nvars = f.nvars();
    const bool integer_mode = scaled && field.is_rationals();

    WorkMap work{WorkGreater{order}};
    WorkMap rem{WorkGreater{order}};
    {
        Polynomial start = integer_mode ? f.primitive() : f;
        for (const auto& t : start.terms()) work.emplace(t.mono, t.coeff);
    }

    unsigned steps_since_strip = 0;
    while (!work.empty()) {
        auto lead_it = work.begin();
        const Monomial lead_mono = lead_it->first;
        const Scalar lead_coeff = lead_it->second;

        std::size_t hit = divisors.size();
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (divisor_leads[i].divides(lead_mono)) {
                hit = i;
                break;
            }
        }
        if (hit == divisors.size()) {
            rem.emplace(lead_mono, lead_coeff);
            work.erase(lead_it);
            continue;
        }

        const Polynomial& g = divisors[hit];
        const Term& glt = g.leading_term(order);
        Monomial shift = glt.mono.divide_into(lead_mono);
        if (scaled && field.is_rationals()) {
            // work := lc(g) * work - lc(work) * shift * g, all integral
            scale_map(work, glt.coeff);
            scale_map(rem, glt.coeff);
            add_into(work, g, -lead_coeff, shift);
            if (++steps_since_strip >= 24) {
                steps_since_strip = 0;
                mpz_class g0 = integer_content(work, rem);
                if (g0 > 1) {
                    Scalar inv = Scalar::from_mpq(field, mpq_class(1, g0));
                    scale_map(work, inv);
                    scale_map(rem, inv);
                }
            }
        } else {
            add_into(work, g, -(lead_coeff / glt.coeff), shift);
        }
        // the leading monomial must be gone
        auto chk = work.find(lead_mono);
        if (chk != work.end()) throw InvariantViolation("reduction failed to cancel leading term");
    }

    Polynomial r = from_workmap(field, nvars, rem);
    if (scaled && !r.is_zero()) r = r.primitive();
    return r;
}

}  // namespace gbdetail

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.elems.empty()) return f;
    return gbdetail::reduce_full(f, gb.elems, gb.leads, gb.order, false);
}

inline bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

namespace gbdetail {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

struct PairCmp {
    MonomialOrder order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm.deg() != b.lcm.deg()) return a.lcm.deg() < b.lcm.deg();
        int c = order.cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace gbdetail

// Buchberger with the Gebauer-Moeller pair criteria and normal (degree)
// selection.  Deterministic: a fixed input yields a fixed run, and the
// reduced output is the unique reduced basis of the ideal.
inline GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order,
                                const ComputeLimits& limits = global_limits()) {
    using namespace gbdetail;

    GroebnerBasis out;
    out.order = order;
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.empty()) return out;

    const FieldTag field = gens[0].field();
    const std::size_t nvars = gens[0].nvars();
    for (const auto& g : gens)
        if (g.field() != field || g.nvars() != nvars)
            throw ValueError("buchberger: generators live in different ambient rings");

    std::vector<Polynomial> basis;   // primitive representatives
    std::vector<Monomial> leads;
    std::set<Pair, PairCmp> pairs{PairCmp{order}};

    auto gm_add = [&](const Polynomial& h) {
        const std::size_t t = basis.size();
        const Monomial& hm = h.leading_term(order).mono;

        // chain criterion on surviving old pairs
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Monomial& l = it->lcm;
            if (hm.divides(l) && leads[it->i].lcm(hm) != l && leads[it->j].lcm(hm) != l)
                it = pairs.erase(it);
            else
                ++it;
        }

        // candidate pairs (i, t), pruned by the M/F/B criteria
        std::vector<Pair> cand;
        cand.reserve(t);
        for (std::size_t i = 0; i < t; ++i) cand.push_back({i, t, leads[i].lcm(hm)});
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
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                if (!dead[b] && cand[b].lcm == cand[a].lcm) dead[b] = true;
            }
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            if (leads[cand[a].i].coprime_with(hm)) continue;  // Buchberger's first criterion
            pairs.insert(cand[a]);
        }

        basis.push_back(h);
        leads.push_back(hm);
        if (basis.size() > limits.max_basis_elements)
            throw ResourceLimitExceeded("Groebner basis exceeded the element ceiling");
        if (h.total_degree() > limits.max_poly_degree)
            throw ResourceLimitExceeded("Groebner basis element exceeded the degree ceiling");
    };

    for (const auto& g : gens) {
        Polynomial r = basis.empty() ? (field.is_rationals() ? g.primitive() : g.monic())
                                     : reduce_full(g, basis, leads, order, true);
        if (!r.is_zero()) gm_add(r);
    }

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const Polynomial& f = basis[p.i];
        const Polynomial& g = basis[p.j];
        const Term& flt = f.leading_term(order);
        const Term& glt = g.leading_term(order);
        Polynomial s = f.times_term(glt.coeff, flt.mono.divide_into(p.lcm)) -
                       g.times_term(flt.coeff, glt.mono.divide_into(p.lcm));
        Polynomial r = reduce_full(s, basis, leads, order, true);
        if (!r.is_zero()) gm_add(r);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> minimal;
    minimal.reserve(keep.size());
    for (std::size_t i : keep) minimal.push_back(basis[i].monic());

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.cmp(a.leading_term(order).mono, b.leading_term(order).mono) < 0;
    });

    // tail reduction to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<Monomial> other_leads;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j == i) continue;
                others.push_back(minimal[j]);
                other_leads.push_back(minimal[j].leading_term(order).mono);
            }
            Polynomial r = reduce_full(minimal[i], others, other_leads, order, false);
            if (r != minimal[i]) {
                minimal[i] = r.monic();
                changed = true;
            }
        }
    }

    out.elems = std::move(minimal);
    out.leads.reserve(out.elems.size());
    for (const auto& e : out.elems) out.leads.push_back(e.leading_term(order).mono);
    return out;
}

// Generators of ideal(gens) ∩ k[x_k, ..., x_{n-1}]: a block basis eliminating
// the first k variables, filtered to the elements free of them.
inline std::vector<Polynomial> eliminate_first(const std::vector<Polynomial>& gens, std::size_t k,
                                               const ComputeLimits& limits = global_limits()) {
    MonomialOrder order = k == 0 ? MonomialOrder::grevlex() : MonomialOrder::block_elim(k);
    GroebnerBasis gb = buchberger(gens, order, limits);
    std::vector<Polynomial> kept;
    for (const auto& e : gb.elems)
        if (e.free_of_first(k)) kept.push_back(e);
    return kept;
}

// Test hook: verify that every S-pair of the basis reduces to zero.
inline bool spair_audit(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elems.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
            const Term& a = gb.elems[i].leading_term(gb.order);
            const Term& b = gb.elems[j].leading_term(gb.order);
            Monomial l = a.mono.lcm(b.mono);
            Polynomial s = gb.elems[i].times_term(b.coeff, a.mono.divide_into(l)) -
                           gb.elems[j].times_term(a.coeff, b.mono.divide_into(l));
            if (!normal_form(s, gb).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace seminorm

#endif
