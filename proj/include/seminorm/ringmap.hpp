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

#ifndef SEMINORM_RINGMAP_HPP
#define SEMINORM_RINGMAP_HPP

#include <deque>
#include <map>

#include "ideal.hpp"
#include "module_gb.hpp"

namespace seminorm {

// Ring homomorphism between affine rings, given by the image of each source
// variable.  Well-definedness (defining relations map to zero) is verified
// at construction.
class RingMap {
   public:
    RingMap() = default;

    RingMap(const AffineRing& source, const AffineRing& target, std::vector<RingElement> images)
        : source_(source), target_(target), images_(std::move(images)) {
        if (images_.size() != source_.nvars())
            throw ValueError("ring map needs one image per source variable");
        for (const auto& im : images_)
            if (im.ring() != target_) throw ValueError("ring map image lives outside the target ring");
        if (source_.field() != target_.field())
            throw ValueError("ring map between different base fields");
        for (const auto& rel : source_.groebner().elems) {
            if (!apply_poly(rel).is_zero())
                throw ValueError("ring map is not well defined: a defining relation has nonzero image");
        }
    }

    static RingMap identity(const AffineRing& R) {
        std::vector<RingElement> imgs;
        imgs.reserve(R.nvars());
        for (std::size_t i = 0; i < R.nvars(); ++i) imgs.push_back(RingElement::variable(R, i));
        return RingMap(R, R, std::move(imgs));
    }

    const AffineRing& source() const { return source_; }
    const AffineRing& target() const { return target_; }
    const std::vector<RingElement>& images() const { return images_; }

    RingElement apply_poly(const Polynomial& rep) const {
        RingElement acc = RingElement::zero(target_);
        for (const auto& t : rep.terms()) {
            RingElement prod = RingElement::constant(target_, t.coeff);
            for (std::size_t i = 0; i < rep.nvars() && !prod.is_zero(); ++i) {
                if (std::uint32_t e = t.mono.exp(i)) prod *= images_[i].pow(e);
            }
            acc += prod;
        }
        return acc;
    }

    RingElement operator()(const RingElement& x) const {
        if (x.ring() != source_) throw ValueError("ring map applied to an element of a different ring");
        return apply_poly(x.rep());
    }

    friend bool operator==(const RingMap& a, const RingMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) s += ", ";
            s += source_.vars()[i] + " -> " + images_[i].to_string();
        }
        return s + "}";
    }

   private:
    AffineRing source_;
    AffineRing target_;
    std::vector<RingElement> images_;
};

// g after f
inline RingMap compose(const RingMap& g, const RingMap& f) {
    if (f.target() != g.source()) throw ValueError("compose: inner target differs from outer source");
    std::vector<RingElement> imgs;
    imgs.reserve(f.images().size());
    for (const auto& im : f.images()) imgs.push_back(g(im));
    return RingMap(f.source(), g.target(), std::move(imgs));
}

namespace mapdetail {

// The graph of a ring map inside k[target vars | source vars], with the
// target block ordered first so that eliminating it computes kernels and
// reducing against it writes target elements over the source.
struct MapGraph {
    FieldTag field;
    std::size_t t = 0;  // target variable count
    std::size_t s = 0;  // source variable count
    std::vector<std::string> names;
    GroebnerBasis gb;

    Polynomial embed_target(const Polynomial& p) const {
        std::vector<std::size_t> to(p.nvars());
        for (std::size_t i = 0; i < p.nvars(); ++i) to[i] = i;
        return remap_variables(p, to, t + s);
    }

    Polynomial embed_source(const Polynomial& p) const {
        std::vector<std::size_t> to(p.nvars());
        for (std::size_t i = 0; i < p.nvars(); ++i) to[i] = t + i;
        return remap_variables(p, to, t + s);
    }

    Polynomial restrict_source(const Polynomial& p) const {
        std::vector<std::size_t> to(t + s, SIZE_MAX);
        for (std::size_t i = 0; i < s; ++i) to[t + i] = i;
        return remap_variables(p, to, s);
    }

    Polynomial restrict_target(const Polynomial& p) const {
        std::vector<std::size_t> to(t + s, SIZE_MAX);
        for (std::size_t i = 0; i < t; ++i) to[i] = i;
        return remap_variables(p, to, t);
    }
};

inline MapGraph build_graph(const RingMap& f, const ComputeLimits& limits = global_limits()) {
    MapGraph g;
    g.field = f.source().field();
    g.t = f.target().nvars();
    g.s = f.source().nvars();
    std::set<std::string> taken;
    for (const auto& n : f.target().vars()) g.names.push_back(fresh_name(n, taken));
    for (const auto& n : f.source().vars()) g.names.push_back(fresh_name(n, taken));

    std::vector<Polynomial> gens;
    for (const auto& q : f.target().groebner().elems) gens.push_back(g.embed_target(q));
    for (std::size_t i = 0; i < g.s; ++i) {
        Polynomial xi = Polynomial::variable(g.field, g.t + g.s, g.t + i);
        gens.push_back(xi - g.embed_target(f.images()[i].rep()));
    }
    g.gb = buchberger(gens, MonomialOrder::block_elim(g.t), limits);
    return g;
}

}  // namespace mapdetail

// kernel of f as an ideal of the source, by eliminating the target block of
// the graph ideal
inline IdealHandle kernel(const RingMap& f, const ComputeLimits& limits = global_limits()) {
    mapdetail::MapGraph g = mapdetail::build_graph(f, limits);
    std::vector<RingElement> gens;
    for (const auto& e : g.gb.elems) {
        if (!e.free_of_first(g.t)) continue;
        RingElement r(f.source(), g.restrict_source(e));
        if (!r.is_zero()) gens.push_back(r);
    }
    return make_ideal(f.source(), std::move(gens));
}

// preimage of J under f: kernel of source -> target/J
inline IdealHandle preimage(const RingMap& f, const IdealHandle& J,
                            const ComputeLimits& limits = global_limits()) {
    if (J.ring != f.target()) throw ValueError("preimage: ideal lives outside the target ring");
    std::vector<Polynomial> defs = f.target().defining();
    for (const auto& g : J.gens) defs.push_back(g.rep());
    AffineRing shrunk(f.target().field(), f.target().vars(), std::move(defs), limits);
    std::vector<RingElement> imgs;
    imgs.reserve(f.images().size());
    for (const auto& im : f.images()) imgs.push_back(RingElement(shrunk, im.rep()));
    RingMap fbar(f.source(), shrunk, std::move(imgs));
    return kernel(fbar, limits);
}

// f is module-finite iff the initial ideal of the graph contains a pure
// power of every target variable.
inline bool is_finite(const RingMap& f, const ComputeLimits& limits = global_limits()) {
    mapdetail::MapGraph g = mapdetail::build_graph(f, limits);
    for (std::size_t v = 0; v < g.t; ++v) {
        bool found = false;
        for (const auto& lead : g.gb.leads) {
            bool pure = lead.exp(v) > 0;
            for (std::size_t i = 0; i < g.t + g.s && pure; ++i)
                if (i != v && lead.exp(i)) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// f is surjective iff every target variable reduces to a source-only normal
// form against the graph basis.
inline bool is_surjective(const RingMap& f, const ComputeLimits& limits = global_limits()) {
    mapdetail::MapGraph g = mapdetail::build_graph(f, limits);
    for (std::size_t v = 0; v < g.t; ++v) {
        Polynomial xv = Polynomial::variable(g.field, g.t + g.s, v);
        if (!normal_form(xv, g.gb).free_of_first(g.t)) return false;
    }
    return true;
}

// the inverse of an isomorphism, recovered from the graph normal forms
inline RingMap inverse_of_isomorphism(const RingMap& f, const ComputeLimits& limits = global_limits()) {
    mapdetail::MapGraph g = mapdetail::build_graph(f, limits);
    std::vector<RingElement> imgs;
    for (std::size_t v = 0; v < g.t; ++v) {
        Polynomial xv = Polynomial::variable(g.field, g.t + g.s, v);
        Polynomial nf = normal_form(xv, g.gb);
        if (!nf.free_of_first(g.t))
            throw ValueError("inverse_of_isomorphism: map is not surjective");
        imgs.push_back(RingElement(f.source(), g.restrict_source(nf)));
    }
    return RingMap(f.target(), f.source(), std::move(imgs));
}

// Module-finite map together with a module basis of the target over the
// source and the machinery to write target elements in that basis.
struct FiniteMapData {
    RingMap map;
    std::vector<RingElement> basis;        // monomials in the target ring
    mapdetail::MapGraph graph;             // target block first
    std::vector<Monomial> basis_monos;     // in the target's ambient context

    std::size_t rank() const { return basis.size(); }

    // coordinates of x over the basis, as source ring elements
    std::vector<RingElement> write(const RingElement& x) const {
        if (x.ring() != map.target()) throw ValueError("write: element outside the pushforward target");
        Polynomial nf = normal_form(graph.embed_target(x.rep()), graph.gb);
        std::vector<RingElement> out(basis.size(), RingElement::zero(map.source()));
        std::vector<Polynomial> coord(basis.size(),
                                      Polynomial::zero(map.source().field(), map.source().nvars()));
        for (const auto& t : nf.terms()) {
            std::vector<std::uint32_t> tgt(graph.t, 0), src(graph.s, 0);
            for (std::size_t i = 0; i < graph.t; ++i) tgt[i] = t.mono.exp(i);
            for (std::size_t i = 0; i < graph.s; ++i) src[i] = t.mono.exp(graph.t + i);
            Monomial tm(tgt);
            std::size_t idx = basis.size();
            for (std::size_t i = 0; i < basis_monos.size(); ++i)
                if (basis_monos[i] == tm) {
                    idx = i;
                    break;
                }
            if (idx == basis.size())
                throw InvariantViolation("pushforward writer: term outside the standard basis");
            coord[idx] += Polynomial::term(t.coeff, Monomial(src));
        }
        for (std::size_t i = 0; i < basis.size(); ++i) out[i] = RingElement(map.source(), coord[i]);
        return out;
    }
};

// Basis of the target as a module over the source: the standard target
// monomials of the graph ideal.  Requires is_finite(f).
inline FiniteMapData pushforward(const RingMap& f, const ComputeLimits& limits = global_limits()) {
    mapdetail::MapGraph g = mapdetail::build_graph(f, limits);

    std::vector<Monomial> tgt_leads;
    for (const auto& lead : g.gb.leads) {
        bool tgt_only = true;
        for (std::size_t i = g.t; i < g.t + g.s && tgt_only; ++i)
            if (lead.exp(i)) tgt_only = false;
        if (!tgt_only) continue;
        std::vector<std::uint32_t> e(g.t);
        for (std::size_t i = 0; i < g.t; ++i) e[i] = lead.exp(i);
        tgt_leads.push_back(Monomial(std::move(e)));
    }
    // finiteness check: a pure power of every target variable must appear
    for (std::size_t v = 0; v < g.t; ++v) {
        bool found = false;
        for (const auto& m : tgt_leads) {
            bool pure = m.exp(v) > 0;
            for (std::size_t i = 0; i < g.t && pure; ++i)
                if (i != v && m.exp(i)) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) throw NotFinite("pushforward: map is not module-finite");
    }

    auto less = [](const Monomial& a, const Monomial& b) { return cmp_grevlex(a, b) < 0; };
    std::set<Monomial, decltype(less)> seen(less);
    std::deque<Monomial> queue;
    auto standard = [&](const Monomial& m) {
        for (const auto& l : tgt_leads)
            if (l.divides(m)) return false;
        return true;
    };
    Monomial one = Monomial::one(g.t);
    if (standard(one)) {
        seen.insert(one);
        queue.push_back(one);
    }
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < g.t; ++v) {
            Monomial next = m * Monomial::variable(g.t, v);
            if (seen.count(next) || !standard(next)) continue;
            if (seen.size() >= limits.max_pushforward_rank)
                throw ResourceLimitExceeded("pushforward basis exceeds the rank ceiling");
            seen.insert(next);
            queue.push_back(next);
        }
    }

    FiniteMapData out{f, {}, std::move(g), {}};
    for (const auto& m : seen) {
        out.basis_monos.push_back(m);
        out.basis.push_back(RingElement(
            f.target(), Polynomial::term(Scalar::one(f.target().field()), m)));
    }
    return out;
}

// Relations among the pushforward basis over the source: the coefficient
// syzygies of the basis monomials against the graph ideal.
inline std::vector<std::vector<RingElement>> pushforward_relations(
    const FiniteMapData& pf, const ComputeLimits& limits = global_limits()) {
    const auto& g = pf.graph;
    std::vector<Polynomial> basis_polys;
    for (const auto& m : pf.basis_monos)
        basis_polys.push_back(g.embed_target(
            Polynomial::term(Scalar::one(g.field), m)));
    auto raw = coefficient_syzygies(basis_polys, g.gb.elems, g.t, g.field, g.t + g.s, limits);
    std::vector<std::vector<RingElement>> out;
    for (const auto& col : raw) {
        std::vector<RingElement> c;
        bool zero = true;
        for (const auto& p : col) {
            RingElement e(pf.map.source(), g.restrict_source(p));
            if (!e.is_zero()) zero = false;
            c.push_back(std::move(e));
        }
        if (!zero) out.push_back(std::move(c));
    }
    return out;
}

// Finitely generated module over an affine ring presented by generators and
// a relation matrix whose columns are the relations.
struct ModulePresentation {
    AffineRing ring;
    std::size_t rank = 0;
    std::vector<std::vector<RingElement>> relations;  // each column has `rank` entries
};

// Generators of { v in R^s : M v = 0 in R^t / span(target_rels) }.
inline std::vector<std::vector<RingElement>> kernel_generators(
    const AffineRing& R, std::size_t t, const std::vector<std::vector<RingElement>>& cols,
    const std::vector<std::vector<RingElement>>& target_rels = {},
    const ComputeLimits& limits = global_limits()) {
    const FieldTag field = R.field();
    const std::size_t n = R.nvars();
    auto lift = [&](const std::vector<RingElement>& col) {
        std::vector<Polynomial> c;
        c.reserve(t);
        if (col.size() != t) throw ValueError("kernel_generators: column has the wrong length");
        for (const auto& e : col) c.push_back(e.rep());
        return c;
    };
    std::vector<std::vector<Polynomial>> pcols, prels;
    for (const auto& c : cols) pcols.push_back(lift(c));
    for (const auto& c : target_rels) prels.push_back(lift(c));
    auto raw = syzygy_generators(pcols, prels, R.groebner().elems, field, n, t, limits);
    std::vector<std::vector<RingElement>> out;
    for (const auto& v : raw) {
        std::vector<RingElement> w;
        bool zero = true;
        for (const auto& p : v) {
            RingElement e(R, p);
            if (!e.is_zero()) zero = false;
            w.push_back(std::move(e));
        }
        if (zero) continue;
        bool dup = false;
        for (const auto& prev : out)
            if (prev == w) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(w));
    }
    return out;
}

// Kernel of the map R^s -> R^t given by the columns, with its own
// presentation (relations among the kernel generators).
struct ModuleKernel {
    std::vector<std::vector<RingElement>> generators;  // elements of R^s
    ModulePresentation presentation;                   // of the kernel module
};

inline ModuleKernel module_kernel(const AffineRing& R, std::size_t t,
                                  const std::vector<std::vector<RingElement>>& cols,
                                  const std::vector<std::vector<RingElement>>& target_rels = {},
                                  const ComputeLimits& limits = global_limits()) {
    ModuleKernel out;
    out.generators = kernel_generators(R, t, cols, target_rels, limits);
    const std::size_t s = cols.size();
    out.presentation.ring = R;
    out.presentation.rank = out.generators.size();
    if (!out.generators.empty()) {
        // syzygies among the kernel generators inside R^s
        out.presentation.relations = kernel_generators(R, s, out.generators, {}, limits);
    }
    return out;
}

// Ann(R^rank / span(relations)) = ∩_i (span : e_i)
inline IdealHandle annihilator(const ModulePresentation& M,
                               const ComputeLimits& limits = global_limits()) {
    if (M.rank == 0) return unit_ideal(M.ring);
    IdealHandle acc = unit_ideal(M.ring);
    bool first = true;
    for (std::size_t i = 0; i < M.rank; ++i) {
        std::vector<RingElement> ei(M.rank, RingElement::zero(M.ring));
        ei[i] = RingElement::one(M.ring);
        auto quot_vectors = kernel_generators(M.ring, M.rank, {ei}, M.relations, limits);
        std::vector<RingElement> gens;
        for (const auto& v : quot_vectors) gens.push_back(v[0]);
        IdealHandle qi = make_ideal(M.ring, std::move(gens));
        acc = first ? qi : intersect(acc, qi, limits);
        first = false;
    }
    return acc;
}

}  // namespace seminorm

#endif
