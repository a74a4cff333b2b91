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

#ifndef SEMINORM_MONOMIAL_HPP
#define SEMINORM_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace seminorm {

class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps)
        : e_(std::move(exps)), deg_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1) {
        Monomial m(nvars);
        m.e_[i] = e;
        m.deg_ = e;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t deg() const { return deg_; }
    std::uint32_t exp(std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // o / *this, assuming divisibility
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        r.deg_ = o.deg_ - deg_;
        return r;
    }

    std::optional<Monomial> try_divide(const Monomial& denom) const {
        if (!denom.divides(*this)) return std::nullopt;
        return denom.divide_into(*this);
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(e_.size());
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    // true if every variable with positive exponent has index >= k
    bool free_of_first(std::size_t k) const {
        for (std::size_t i = 0; i < k && i < e_.size(); ++i)
            if (e_[i]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

   private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

namespace detail {

// graded reverse lexicographic: higher total degree wins; on ties the
// monomial with the smaller exponent in the last differing position wins.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exp(i);
        db += b.exp(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    }
    return 0;
}

}  // namespace detail

enum class OrderKind : std::uint8_t { Grevlex, Lex, Block };

// Block(k) eliminates the first k variables: compare the leading block by
// grevlex, break ties by grevlex on the remaining variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::size_t block = 0;

    static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder block_elim(std::size_t k) { return {OrderKind::Block, k}; }

    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Grevlex:
                return detail::cmp_grevlex_range(a, b, 0, a.nvars());
            case OrderKind::Lex:
                return detail::cmp_lex(a, b);
            case OrderKind::Block: {
                int c = detail::cmp_grevlex_range(a, b, 0, block);
                if (c) return c;
                return detail::cmp_grevlex_range(a, b, block, a.nvars());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && (a.kind != OrderKind::Block || a.block == b.block);
    }
};

inline int cmp_grevlex(const Monomial& a, const Monomial& b) {
    return detail::cmp_grevlex_range(a, b, 0, a.nvars());
}

}  // namespace seminorm

#endif
