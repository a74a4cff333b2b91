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

#ifndef SEMINORM_SCALAR_HPP
#define SEMINORM_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace seminorm {

namespace detail {

// Deterministic Miller-Rabin; the bases {2,3,5,7} decide primality for all
// n < 3,215,031,751 which covers the supported modulus range p < 2^31.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

}  // namespace detail

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

enum class FieldKind : std::uint8_t { QQ, GF };

struct FieldTag {
    FieldKind kind = FieldKind::QQ;
    std::uint32_t p = 0;  // modulus, GF only

    static FieldTag rationals() { return FieldTag{FieldKind::QQ, 0}; }

    static FieldTag prime_field(std::uint32_t p) {
        if (p >= (1u << 31)) throw ValueError("prime modulus must be < 2^31");
        if (!is_prime_u32(p)) throw ValueError("modulus " + std::to_string(p) + " is not prime");
        return FieldTag{FieldKind::GF, p};
    }

    bool is_rationals() const { return kind == FieldKind::QQ; }
    std::uint32_t characteristic() const { return kind == FieldKind::QQ ? 0 : p; }

    friend bool operator==(const FieldTag& a, const FieldTag& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const FieldTag& a, const FieldTag& b) { return !(a == b); }

    std::string to_string() const {
        return kind == FieldKind::QQ ? std::string("QQ") : "GF(" + std::to_string(p) + ")";
    }
};

// Element of the base field.  QQ values are canonical mpq rationals; GF(p)
// values are residues in [0, p) and all arithmetic stays in int64.
class Scalar {
   public:
    Scalar() : field_(FieldTag::rationals()) {}

    static Scalar zero(const FieldTag& f) { return Scalar(f); }

    static Scalar one(const FieldTag& f) {
        Scalar s(f);
        if (f.is_rationals())
            s.q_ = 1;
        else
            s.r_ = 1 % f.p;
        return s;
    }

    static Scalar from_int(const FieldTag& f, long long v) {
        Scalar s(f);
        if (f.is_rationals()) {
            s.q_ = mpq_class(static_cast<long>(v));
        } else {
            long long m = v % static_cast<long long>(f.p);
            if (m < 0) m += f.p;
            s.r_ = m;
        }
        return s;
    }

    static Scalar from_mpz(const FieldTag& f, const mpz_class& v) {
        Scalar s(f);
        if (f.is_rationals()) {
            s.q_ = mpq_class(v);
        } else {
            mpz_class m = v % mpz_class(f.p);
            if (m < 0) m += f.p;
            s.r_ = m.get_si();
        }
        return s;
    }

    static Scalar from_mpq(const FieldTag& f, const mpq_class& v) {
        if (f.is_rationals()) {
            Scalar s(f);
            s.q_ = v;
            s.q_.canonicalize();
            return s;
        }
        Scalar num = from_mpz(f, v.get_num());
        Scalar den = from_mpz(f, v.get_den());
        if (den.is_zero()) throw ValueError("denominator divisible by the characteristic");
        return num / den;
    }

    const FieldTag& field() const { return field_; }
    bool is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

    const mpq_class& rational() const { return q_; }
    std::int64_t residue() const { return r_; }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_rationals())
            s.q_ = -q_;
        else
            s.r_ = r_ == 0 ? 0 : field_.p - r_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        check_same(o);
        if (field_.is_rationals()) {
            q_ += o.q_;
        } else {
            r_ += o.r_;
            if (r_ >= field_.p) r_ -= field_.p;
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o) {
        check_same(o);
        if (field_.is_rationals()) {
            q_ -= o.q_;
        } else {
            r_ -= o.r_;
            if (r_ < 0) r_ += field_.p;
        }
        return *this;
    }

    Scalar& operator*=(const Scalar& o) {
        check_same(o);
        if (field_.is_rationals())
            q_ *= o.q_;
        else
            r_ = static_cast<std::int64_t>(detail::mulmod_u64(r_, o.r_, field_.p));
        return *this;
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    Scalar inverse() const {
        if (is_zero()) throw ValueError("division by zero in the base field");
        Scalar s(field_);
        if (field_.is_rationals()) {
            s.q_ = 1 / q_;
        } else {
            s.r_ = inv_mod(r_, field_.p);
        }
        return s;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.field_ != b.field_) return false;
        return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(unsigned long e) const {
        Scalar acc = one(field_);
        Scalar base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // "3", "-1/2"; GF residues print in [0, p)
    std::string to_string() const {
        if (field_.is_rationals()) return q_.get_str();
        return std::to_string(r_);
    }

   private:
    explicit Scalar(const FieldTag& f) : field_(f), q_(0), r_(0) {}

    void check_same(const Scalar& o) const {
        if (field_ != o.field_) throw ValueError("scalar arithmetic across different fields");
    }

    static std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1) throw ValueError("element not invertible mod p");
        if (t < 0) t += p;
        return t;
    }

    FieldTag field_;
    mpq_class q_;
    std::int64_t r_ = 0;
};

}  // namespace seminorm

#endif
