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

#ifndef SEMINORM_POLYNOMIAL_HPP
#define SEMINORM_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "scalar.hpp"

namespace seminorm {

struct Term {
    Scalar coeff;
    Monomial mono;
};

// Multivariate polynomial over a fixed base field in a fixed number of
// variables.  Terms are kept sorted strictly descending in grevlex with no
// zero coefficients, so equal polynomials have equal representations.
class Polynomial {
   public:
    Polynomial() : field_(FieldTag::rationals()), nvars_(0) {}

    Polynomial(FieldTag field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    static Polynomial zero(const FieldTag& f, std::size_t nvars) { return Polynomial(f, nvars); }

    static Polynomial constant(const Scalar& c, std::size_t nvars) {
        Polynomial p(c.field(), nvars);
        if (!c.is_zero()) p.terms_.push_back({c, Monomial::one(nvars)});
        return p;
    }

    static Polynomial one(const FieldTag& f, std::size_t nvars) {
        return constant(Scalar::one(f), nvars);
    }

    static Polynomial variable(const FieldTag& f, std::size_t nvars, std::size_t i) {
        Polynomial p(f, nvars);
        p.terms_.push_back({Scalar::one(f), Monomial::variable(nvars, i)});
        return p;
    }

    static Polynomial term(const Scalar& c, const Monomial& m) {
        Polynomial p(c.field(), m.nvars());
        if (!c.is_zero()) p.terms_.push_back({c, m});
        return p;
    }

    // terms need not be sorted or combined
    static Polynomial from_terms(const FieldTag& f, std::size_t nvars, std::vector<Term> ts) {
        Polynomial p(f, nvars);
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
            return cmp_grevlex(a.mono, b.mono) > 0;
        });
        for (auto& t : ts) {
            if (t.coeff.is_zero()) continue;
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const FieldTag& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }

    Scalar constant_coefficient() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
        return Scalar::zero(field_);
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.deg());
        return d;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
        return d;
    }

    bool uses_variable(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.mono.exp(var)) return true;
        return false;
    }

    bool free_of_first(std::size_t k) const {
        for (const auto& t : terms_)
            if (!t.mono.free_of_first(k)) return false;
        return true;
    }

    // leading term in grevlex (the storage order)
    const Term& leading_term() const { return terms_.front(); }

    const Term& leading_term(const MonomialOrder& order) const {
        if (order.kind == OrderKind::Grevlex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return terms_[best];
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_context(b);
        Polynomial r(a.field_, a.nvars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = cmp_grevlex(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Scalar s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({std::move(s), a.terms_[i].mono});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    // this * (c * m)
    Polynomial times_term(const Scalar& c, const Monomial& m) const {
        Polynomial r(field_, nvars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Scalar s = t.coeff * c;
            if (!s.is_zero()) r.terms_.push_back({std::move(s), t.mono * m});
        }
        return r;
    }

    Polynomial times_scalar(const Scalar& c) const { return times_term(c, Monomial::one(nvars_)); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_context(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_);
        const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
        const Polynomial& big = a.terms_.size() <= b.terms_.size() ? b : a;
        auto greater = [](const Monomial& x, const Monomial& y) { return cmp_grevlex(x, y) > 0; };
        std::map<Monomial, Scalar, decltype(greater)> acc(greater);
        for (const auto& ts : small.terms_) {
            for (const auto& tb : big.terms_) {
                Monomial m = ts.mono * tb.mono;
                Scalar c = ts.coeff * tb.coeff;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        Polynomial r(a.field_, a.nvars_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) r.terms_.push_back({c, m});
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned e) const {
        Polynomial acc = one(field_, nvars_);
        Polynomial base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.field_ != b.field_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(std::size_t var) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            std::uint32_t e = t.mono.exp(var);
            if (e == 0) continue;
            Scalar c = t.coeff * Scalar::from_int(field_, e);
            if (c.is_zero()) continue;  // characteristic divides the exponent
            auto exps = t.mono.exponents();
            exps[var] -= 1;
            out.push_back({std::move(c), Monomial(std::move(exps))});
        }
        return from_terms(field_, nvars_, std::move(out));
    }

    // Leading coefficient becomes 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return times_scalar(terms_.front().coeff.inverse());
    }

    // Over QQ: divide by the rational content and normalize the sign of the
    // leading coefficient, leaving a primitive integer polynomial.  Over
    // GF(p) this is monic().  The result generates the same ideal.
    Polynomial primitive() const {
        if (is_zero()) return *this;
        if (!field_.is_rationals()) return monic();
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& t : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
        }
        mpq_class factor(den_lcm, num_gcd);
        factor.canonicalize();
        if (terms_.front().coeff.rational() < 0) factor = -factor;
        return times_scalar(Scalar::from_mpq(field_, factor));
    }

    // substitute polynomials for variables; images[i] replaces variable i and
    // must share field; the result lives in the images' variable context
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars_) throw ValueError("substitution image count mismatch");
        std::size_t out_vars = nvars_ ? images[0].nvars() : 0;
        Polynomial r = Polynomial::zero(field_, out_vars);
        for (const auto& t : terms_) {
            Polynomial prod = Polynomial::constant(t.coeff, out_vars);
            for (std::size_t i = 0; i < nvars_ && !prod.is_zero(); ++i) {
                if (std::uint32_t e = t.mono.exp(i)) prod *= images[i].pow(e);
            }
            r += prod;
        }
        return r;
    }

    // single-divisor division; nullopt when the remainder is nonzero
    std::optional<Polynomial> try_exact_divide(const Polynomial& g) const {
        check_context(g);
        if (g.is_zero()) throw ValueError("division by zero polynomial");
        Polynomial rem = *this;
        Polynomial quot(field_, nvars_);
        const Term& glt = g.terms_.front();
        while (!rem.is_zero()) {
            const Term& rlt = rem.terms_.front();
            auto m = rlt.mono.try_divide(glt.mono);
            if (!m) return std::nullopt;
            Scalar c = rlt.coeff / glt.coeff;
            quot += Polynomial::term(c, *m);
            rem -= g.times_term(c, *m);
        }
        return quot;
    }

    Polynomial exact_divide(const Polynomial& g) const {
        auto q = try_exact_divide(g);
        if (!q) throw InvariantViolation("exact_divide: division is not exact");
        return *q;
    }

    std::string to_string(const std::vector<std::string>& var_names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string cs = t.coeff.to_string();
            bool negative = cs.size() && cs[0] == '-';
            std::string abs = negative ? cs.substr(1) : cs;
            if (first) {
                out += negative ? "-" : "";
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                std::uint32_t e = t.mono.exp(i);
                if (!e) continue;
                if (!mono.empty()) mono += "*";
                mono += var_names[i];
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                out += abs;
            } else if (abs == "1") {
                out += mono;
            } else {
                out += abs + "*" + mono;
            }
        }
        return out;
    }

   private:
    void check_context(const Polynomial& o) const {
        if (field_ != o.field_ || nvars_ != o.nvars_)
            throw ValueError("polynomial arithmetic across different ambient rings");
    }

    FieldTag field_;
    std::uint32_t nvars_;
    std::vector<Term> terms_;
};

// total order on polynomials of one ambient ring, for deterministic sorting:
// grevlex on monomials term by term, coefficients as tie-break
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        int c = cmp_grevlex(ta[i].mono, tb[i].mono);
        if (c) return c < 0;
        if (ta[i].coeff != tb[i].coeff) {
            if (a.field().is_rationals()) return ta[i].coeff.rational() < tb[i].coeff.rational();
            return ta[i].coeff.residue() < tb[i].coeff.residue();
        }
    }
    return ta.size() < tb.size();
}

}  // namespace seminorm

#endif
