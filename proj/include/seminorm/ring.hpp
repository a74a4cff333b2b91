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

#ifndef SEMINORM_RING_HPP
#define SEMINORM_RING_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "parser.hpp"

namespace seminorm {

// Finitely presented affine ring k[x_1..x_n]/I with a cached reduced grevlex
// basis of I.  Values are immutable and shared; two rings are the same ring
// exactly when field, variables, and reduced basis coincide.
class AffineRing {
   public:
    AffineRing() : data_(std::make_shared<Data>()) {}

    AffineRing(FieldTag field, std::vector<std::string> var_names, std::vector<Polynomial> defining,
               const ComputeLimits& limits = global_limits()) {
        auto d = std::make_shared<Data>();
        d->field = field;
        d->vars = std::move(var_names);
        validate_names(d->vars);
        for (auto& p : defining) {
            if (p.field() != field || p.nvars() != d->vars.size())
                throw ValueError("defining polynomial does not live in the declared ambient ring");
        }
        d->defining = std::move(defining);
        d->gb = buchberger(d->defining, MonomialOrder::grevlex(), limits);
        data_ = std::move(d);
    }

    const FieldTag& field() const { return data_->field; }
    const std::vector<std::string>& vars() const { return data_->vars; }
    std::size_t nvars() const { return data_->vars.size(); }
    const std::vector<Polynomial>& defining() const { return data_->defining; }
    const GroebnerBasis& groebner() const { return data_->gb; }

    bool is_polynomial_ring() const { return data_->gb.elems.empty(); }
    bool is_zero_ring() const { return data_->gb.contains_one(); }

    Polynomial reduce(const Polynomial& p) const { return normal_form(p, data_->gb); }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < data_->vars.size(); ++i)
            if (data_->vars[i] == name) return i;
        throw ValueError("unknown variable '" + name + "'");
    }

    friend bool operator==(const AffineRing& a, const AffineRing& b) {
        if (a.data_ == b.data_) return true;
        return a.data_->field == b.data_->field && a.data_->vars == b.data_->vars &&
               a.data_->gb.elems == b.data_->gb.elems;
    }
    friend bool operator!=(const AffineRing& a, const AffineRing& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = data_->field.to_string() + "[";
        for (std::size_t i = 0; i < data_->vars.size(); ++i) {
            if (i) s += ", ";
            s += data_->vars[i];
        }
        s += "]";
        if (!data_->gb.elems.empty()) {
            s += "/(";
            for (std::size_t i = 0; i < data_->gb.elems.size(); ++i) {
                if (i) s += ", ";
                s += data_->gb.elems[i].to_string(data_->vars);
            }
            s += ")";
        }
        return s;
    }

   private:
    struct Data {
        FieldTag field = FieldTag::rationals();
        std::vector<std::string> vars;
        std::vector<Polynomial> defining;
        GroebnerBasis gb;
    };

    static void validate_names(const std::vector<std::string>& names) {
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (!is_valid_identifier(n)) throw ValueError("invalid variable name '" + n + "'");
            if (!seen.insert(n).second) throw ValueError("duplicate variable name '" + n + "'");
        }
    }

    std::shared_ptr<const Data> data_;
};

// Element of an affine ring, stored as the normal form of a representative
// against the ring's reduced basis.  Equality is representational.
class RingElement {
   public:
    RingElement() = default;

    RingElement(const AffineRing& ring, const Polynomial& rep) : ring_(ring), rep_(ring.reduce(rep)) {}

    static RingElement zero(const AffineRing& r) {
        return RingElement(r, Polynomial::zero(r.field(), r.nvars()));
    }
    static RingElement one(const AffineRing& r) {
        return RingElement(r, Polynomial::one(r.field(), r.nvars()));
    }
    static RingElement variable(const AffineRing& r, std::size_t i) {
        return RingElement(r, Polynomial::variable(r.field(), r.nvars(), i));
    }
    static RingElement constant(const AffineRing& r, const Scalar& c) {
        return RingElement(r, Polynomial::constant(c, r.nvars()));
    }

    const AffineRing& ring() const { return ring_; }
    const Polynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }
    bool is_constant() const { return rep_.is_constant(); }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        a.check_ring(b);
        return RingElement(a.ring_, a.rep_ + b.rep_);
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        a.check_ring(b);
        return RingElement(a.ring_, a.rep_ - b.rep_);
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        a.check_ring(b);
        return RingElement(a.ring_, a.rep_ * b.rep_);
    }
    RingElement operator-() const { return RingElement(ring_, -rep_); }

    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    RingElement pow(unsigned e) const {
        RingElement acc = one(ring_);
        RingElement base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string to_string() const { return rep_.to_string(ring_.vars()); }

   private:
    void check_ring(const RingElement& o) const {
        if (ring_ != o.ring_) throw ValueError("ring elements live in different rings");
    }

    AffineRing ring_;
    Polynomial rep_;
};

enum class ArithOp { Add, Sub, Mul, Pow };

inline RingElement ring_arith(const RingElement& a, const RingElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Pow: throw ValueError("pow takes an integer exponent, not a ring element");
    }
    throw ValueError("unknown arithmetic operation");
}

inline RingElement ring_pow(const RingElement& a, unsigned e) { return a.pow(e); }

inline AffineRing make_affine_ring(const FieldTag& field, const std::vector<std::string>& var_names,
                                   const std::vector<std::string>& relation_texts,
                                   const ComputeLimits& limits = global_limits()) {
    std::vector<Polynomial> rels;
    rels.reserve(relation_texts.size());
    for (const auto& t : relation_texts) rels.push_back(parse_polynomial_text(t, field, var_names));
    return AffineRing(field, var_names, std::move(rels), limits);
}

inline RingElement parse_element(const std::string& text, const AffineRing& ring) {
    return RingElement(ring, parse_polynomial_text(text, ring.field(), ring.vars()));
}

inline RingElement partial_derivative(const RingElement& f, std::size_t var) {
    return RingElement(f.ring(), f.rep().derivative(var));
}

// Fresh names: `base`, or `base_1`, `base_2`, ... first avoiding everything
// in `taken`; the chosen name is recorded in `taken`.
inline std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
    if (!taken.count(base)) {
        taken.insert(base);
        return base;
    }
    for (unsigned k = 1;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (!taken.count(cand)) {
            taken.insert(cand);
            return cand;
        }
    }
}

}  // namespace seminorm

#endif
