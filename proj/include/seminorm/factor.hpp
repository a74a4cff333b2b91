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

#ifndef SEMINORM_FACTOR_HPP
#define SEMINORM_FACTOR_HPP

#include <random>
#include <utility>
#include <vector>

#include "limits.hpp"
#include "polynomial.hpp"

namespace seminorm {

// Complete factorization into monic irreducibles: unit * prod(factor^mult).
struct Factorization {
    Scalar unit;
    std::vector<std::pair<Polynomial, unsigned>> factors;
};

namespace facdetail {

// ---------------------------------------------------------------------------
// dense univariate arithmetic over GF(p), coefficients in [0, p)
// ---------------------------------------------------------------------------

using ZpPoly = std::vector<std::int64_t>;  // c[i] is the coefficient of x^i

inline void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int zp_deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<std::int64_t>(detail::mulmod_u64(a[i], b[j], p))) % p;
    }
    zp_trim(r);
    return r;
}

inline ZpPoly zp_add(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = v % p;
    }
    zp_trim(r);
    return r;
}

inline ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((v % p) + p) % p;
    }
    zp_trim(r);
    return r;
}

inline std::int64_t zp_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw ValueError("zp_inv: not invertible");
    return t < 0 ? t + p : t;
}

inline ZpPoly zp_monic(const ZpPoly& f, std::int64_t p) {
    if (f.empty()) return f;
    std::int64_t inv = zp_inv(f.back(), p);
    ZpPoly r(f);
    for (auto& c : r) c = static_cast<std::int64_t>(detail::mulmod_u64(c, inv, p));
    return r;
}

// remainder of a by b
inline ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, std::int64_t p) {
    if (b.empty()) throw ValueError("zp_rem: division by zero");
    std::int64_t inv = zp_inv(b.back(), p);
    while (zp_deg(a) >= zp_deg(b)) {
        std::int64_t c = static_cast<std::int64_t>(detail::mulmod_u64(a.back(), inv, p));
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::int64_t v = a[i + shift] - static_cast<std::int64_t>(detail::mulmod_u64(c, b[i], p));
            a[i + shift] = ((v % p) + p) % p;
        }
        zp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline ZpPoly zp_divexact(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
    ZpPoly rem(a), q(a.size(), 0);
    std::int64_t inv = zp_inv(b.back(), p);
    while (zp_deg(rem) >= zp_deg(b)) {
        std::int64_t c = static_cast<std::int64_t>(detail::mulmod_u64(rem.back(), inv, p));
        std::size_t shift = rem.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::int64_t v = rem[i + shift] - static_cast<std::int64_t>(detail::mulmod_u64(c, b[i], p));
            rem[i + shift] = ((v % p) + p) % p;
        }
        zp_trim(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) throw InvariantViolation("zp_divexact: not divisible");
    zp_trim(q);
    return q;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return zp_monic(a, p);
}

inline ZpPoly zp_powmod(const ZpPoly& base, const mpz_class& e, const ZpPoly& mod, std::int64_t p) {
    ZpPoly acc{1};
    ZpPoly b = zp_rem(base, mod, p);
    mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        acc = zp_rem(zp_mul(acc, acc, p), mod, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = zp_rem(zp_mul(acc, b, p), mod, p);
    }
    return acc;
}

inline ZpPoly zp_derivative(const ZpPoly& f, std::int64_t p) {
    ZpPoly r;
    for (std::size_t i = 1; i < f.size(); ++i)
        r.push_back(static_cast<std::int64_t>(detail::mulmod_u64(f[i], i % p, p)));
    zp_trim(r);
    return r;
}

// extended Euclid: s*a + t*b = gcd (monic); used for the Hensel Bezout seed
inline void zp_bezout(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t, std::int64_t p) {
    ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        ZpPoly q(std::max<std::size_t>(r0.size(), 1), 0);
        ZpPoly rem(r0);
        std::int64_t inv = zp_inv(r1.back(), p);
        while (zp_deg(rem) >= zp_deg(r1)) {
            std::int64_t c = static_cast<std::int64_t>(detail::mulmod_u64(rem.back(), inv, p));
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                std::int64_t v = rem[i + shift] - static_cast<std::int64_t>(detail::mulmod_u64(c, r1[i], p));
                rem[i + shift] = ((v % p) + p) % p;
            }
            zp_trim(rem);
            if (rem.empty()) break;
        }
        zp_trim(q);
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (zp_deg(r0) != 0) throw InvariantViolation("zp_bezout: inputs not coprime");
    std::int64_t inv = zp_inv(r0[0], p);
    s = s0;
    t = t0;
    for (auto& c : s) c = static_cast<std::int64_t>(detail::mulmod_u64(c, inv, p));
    for (auto& c : t) c = static_cast<std::int64_t>(detail::mulmod_u64(c, inv, p));
}

// p-th root of f = g(x^p) over the prime field (Frobenius fixes scalars)
inline ZpPoly zp_pth_root(const ZpPoly& f, std::int64_t p) {
    ZpPoly g;
    for (std::size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
    zp_trim(g);
    return g;
}

inline std::vector<std::pair<ZpPoly, unsigned>> zp_squarefree(const ZpPoly& f_in, std::int64_t p) {
    std::vector<std::pair<ZpPoly, unsigned>> out;
    ZpPoly f = zp_monic(f_in, p);
    if (zp_deg(f) < 1) return out;
    ZpPoly fp = zp_derivative(f, p);
    if (fp.empty()) {
        for (auto& [g, m] : zp_squarefree(zp_pth_root(f, p), p)) out.push_back({g, m * static_cast<unsigned>(p)});
        return out;
    }
    ZpPoly c = zp_gcd(f, fp, p);
    ZpPoly w = zp_divexact(f, c, p);
    unsigned i = 1;
    while (zp_deg(w) > 0) {
        ZpPoly y = zp_gcd(w, c, p);
        ZpPoly z = zp_divexact(w, y, p);
        if (zp_deg(z) > 0) out.push_back({zp_monic(z, p), i});
        ++i;
        w = std::move(y);
        c = zp_divexact(c, w, p);
    }
    if (zp_deg(c) > 0) {
        for (auto& [g, m] : zp_squarefree(zp_pth_root(c, p), p)) out.push_back({g, m * static_cast<unsigned>(p)});
    }
    return out;
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
inline void zp_edf(const ZpPoly& f, unsigned d, std::int64_t p, std::mt19937_64& rng,
                   std::vector<ZpPoly>& out) {
    if (zp_deg(f) == static_cast<int>(d)) {
        out.push_back(zp_monic(f, p));
        return;
    }
    const int n = zp_deg(f);
    while (true) {
        ZpPoly r(n, 0);
        for (auto& c : r) c = static_cast<std::int64_t>(rng() % p);
        zp_trim(r);
        if (zp_deg(r) < 1) continue;
        ZpPoly g = zp_gcd(r, f, p);
        if (zp_deg(g) > 0 && zp_deg(g) < n) {
            zp_edf(g, d, p, rng, out);
            zp_edf(zp_divexact(f, g, p), d, p, rng, out);
            return;
        }
        ZpPoly s;
        if (p == 2) {
            // trace map over GF(2^d)
            s = {};
            ZpPoly t = zp_rem(r, f, p);
            for (unsigned i = 0; i < d; ++i) {
                s = zp_add(s, t, p);
                t = zp_rem(zp_mul(t, t, p), f, p);
            }
        } else {
            mpz_class e = 0;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
            e = (e - 1) / 2;
            s = zp_powmod(r, e, f, p);
            if (s.empty())
                s = ZpPoly{static_cast<std::int64_t>(p - 1)};
            else
                s = zp_sub(s, ZpPoly{1}, p);
        }
        if (s.empty()) continue;
        g = zp_gcd(s, f, p);
        if (zp_deg(g) > 0 && zp_deg(g) < n) {
            zp_edf(g, d, p, rng, out);
            zp_edf(zp_divexact(f, g, p), d, p, rng, out);
            return;
        }
    }
}

// distinct-degree then equal-degree factorization of a monic squarefree poly
inline std::vector<ZpPoly> zp_factor_squarefree(const ZpPoly& f_in, std::int64_t p,
                                                std::mt19937_64& rng) {
    std::vector<ZpPoly> out;
    ZpPoly f = zp_monic(f_in, p);
    ZpPoly x{0, 1};
    ZpPoly h = zp_rem(x, f, p);
    unsigned d = 0;
    while (zp_deg(f) >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = zp_powmod(h, mpz_class(static_cast<long>(p)), f, p);
        ZpPoly g = zp_gcd(zp_sub(h, x, p), f, p);
        if (zp_deg(g) > 0) {
            zp_edf(g, d, p, rng, out);
            f = zp_divexact(f, g, p);
            h = zp_rem(h, f, p);
        }
    }
    if (zp_deg(f) > 0) out.push_back(zp_monic(f, p));
    return out;
}

inline std::vector<std::pair<ZpPoly, unsigned>> zp_factor(const ZpPoly& f, std::int64_t p,
                                                          std::mt19937_64& rng) {
    std::vector<std::pair<ZpPoly, unsigned>> out;
    for (auto& [part, mult] : zp_squarefree(f, p)) {
        for (auto& irr : zp_factor_squarefree(part, p, rng)) out.push_back({irr, mult});
    }
    return out;
}

// ---------------------------------------------------------------------------
// dense univariate arithmetic over ZZ
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;

inline void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    z_trim(r);
    return r;
}

inline mpz_class z_content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline ZPoly z_primitive(const ZPoly& f) {
    mpz_class c = z_content(f);
    if (c == 0) return f;
    if (f.back() < 0) c = -c;
    ZPoly r(f);
    for (auto& x : r) x /= c;
    return r;
}

inline ZPoly z_derivative(const ZPoly& f) {
    ZPoly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
    z_trim(r);
    return r;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
inline ZPoly z_pseudo_rem(ZPoly a, const ZPoly& b) {
    int k = z_deg(a) - z_deg(b) + 1;
    while (z_deg(a) >= z_deg(b) && !a.empty()) {
        mpz_class c = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& x : a) x *= b.back();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        z_trim(a);
        --k;
    }
    for (; k > 0; --k)
        for (auto& x : a) x *= b.back();
    return a;
}

inline ZPoly z_gcd(ZPoly a, ZPoly b) {
    mpz_class ca = z_content(a), cb = z_content(b);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = z_primitive(a);
    b = z_primitive(b);
    if (a.empty()) return b.empty() ? b : z_primitive(b);
    if (b.empty()) return a;
    if (z_deg(a) < z_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = z_primitive(z_pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    ZPoly g = z_primitive(a);
    for (auto& x : g) x *= cg;
    if (cg == 0) return g;  // both inputs zero
    return z_deg(g) >= 0 && g.back() < 0 ? z_primitive(g) : g;
}

inline bool z_try_divexact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) return false;
    ZPoly rem(a);
    q.assign(a.size(), 0);
    while (z_deg(rem) >= z_deg(b)) {
        mpz_class c;
        mpz_class r0;
        mpz_tdiv_qr(c.get_mpz_t(), r0.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        if (r0 != 0) return false;
        std::size_t shift = rem.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
        z_trim(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) return false;
    z_trim(q);
    return true;
}

inline ZPoly z_divexact(const ZPoly& a, const ZPoly& b) {
    ZPoly q;
    if (!z_try_divexact(a, b, q)) throw InvariantViolation("z_divexact: not divisible");
    return q;
}

// characteristic-zero squarefree decomposition (Musser chain)
inline std::vector<std::pair<ZPoly, unsigned>> z_squarefree(const ZPoly& f_in) {
    std::vector<std::pair<ZPoly, unsigned>> out;
    ZPoly f = z_primitive(f_in);
    if (z_deg(f) < 1) return out;
    ZPoly c = z_gcd(f, z_derivative(f));
    if (z_deg(c) == 0) {
        out.push_back({f, 1});
        return out;
    }
    ZPoly w = z_divexact(f, c);
    unsigned i = 1;
    while (z_deg(w) > 0) {
        ZPoly y = z_gcd(w, c);
        ZPoly z = z_divexact(w, y);
        if (z_deg(z) > 0) out.push_back({z_primitive(z), i});
        ++i;
        w = std::move(y);
        c = z_divexact(c, w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting modulo p^k and Zassenhaus recombination
// ---------------------------------------------------------------------------

inline ZPoly zmod_reduce(const ZPoly& f, const mpz_class& m) {
    ZPoly r(f);
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    z_trim(r);
    return r;
}

inline ZPoly zmod_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    return zmod_reduce(z_mul(a, b), m);
}

inline ZPoly zmod_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpz_class v = (i < a.size() ? a[i] : mpz_class(0)) - (i < b.size() ? b[i] : mpz_class(0));
        v %= m;
        if (v < 0) v += m;
        r[i] = v;
    }
    z_trim(r);
    return r;
}

inline ZPoly zmod_add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpz_class v = (i < a.size() ? a[i] : mpz_class(0)) + (i < b.size() ? b[i] : mpz_class(0));
        v %= m;
        r[i] = v;
    }
    z_trim(r);
    return r;
}

// division by a monic polynomial, coefficients mod m
inline void zmod_divrem_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m, ZPoly& q, ZPoly& r) {
    r = a;
    q.assign(a.size(), 0);
    while (z_deg(r) >= z_deg(b)) {
        mpz_class c = r.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            mpz_class v = r[i + shift] - c * b[i];
            v %= m;
            if (v < 0) v += m;
            r[i + shift] = v;
        }
        z_trim(r);
        if (r.empty()) break;
    }
    z_trim(q);
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
// with f, g, h monic, to the same data mod m^2.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZPoly e = zmod_sub(f, z_mul(g, h), m2);
    ZPoly q, r;
    zmod_divrem_monic(zmod_mul(s, e, m2), h, m2, q, r);
    ZPoly g1 = zmod_add(g, zmod_add(zmod_mul(t, e, m2), zmod_mul(q, g, m2), m2), m2);
    ZPoly h1 = zmod_add(h, r, m2);
    ZPoly b = zmod_sub(zmod_add(zmod_mul(s, g1, m2), zmod_mul(t, h1, m2), m2), ZPoly{1}, m2);
    ZPoly c, d;
    zmod_divrem_monic(zmod_mul(s, b, m2), h1, m2, c, d);
    ZPoly s1 = zmod_sub(s, d, m2);
    ZPoly t1 = zmod_sub(zmod_sub(t, zmod_mul(t, b, m2), m2), zmod_mul(c, g1, m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lift the factorization F = prod(parts) (mod p), F monic mod p^k, into
// monic factors mod p^k, recursively splitting the list.
inline void hensel_tree(const ZPoly& F, const std::vector<ZpPoly>& parts, std::size_t lo,
                        std::size_t hi, std::int64_t p, unsigned k, const mpz_class& pk,
                        std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(zmod_reduce(F, pk));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    ZpPoly gl{1}, hr{1};
    for (std::size_t i = lo; i < mid; ++i) gl = zp_mul(gl, parts[i], p);
    for (std::size_t i = mid; i < hi; ++i) hr = zp_mul(hr, parts[i], p);
    ZpPoly s0, t0;
    zp_bezout(gl, hr, s0, t0, p);

    auto to_z = [](const ZpPoly& a) {
        ZPoly r;
        r.reserve(a.size());
        for (auto c : a) r.emplace_back(static_cast<long>(c));
        return r;
    };
    ZPoly g = to_z(gl), h = to_z(hr), s = to_z(s0), t = to_z(t0);
    mpz_class m(static_cast<long>(p));
    while (m < pk) {
        hensel_step(zmod_reduce(F, m * m), g, h, s, t, m);
        m *= m;
    }
    g = zmod_reduce(g, pk);
    h = zmod_reduce(h, pk);
    hensel_tree(g, parts, lo, mid, p, k, pk, out);
    hensel_tree(h, parts, mid, hi, p, k, pk, out);
}

inline mpz_class symmetric(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (r * 2 > m) r -= m;
    return r;
}

// Zassenhaus: complete factorization of a primitive squarefree f over ZZ.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f_in, std::mt19937_64& rng) {
    ZPoly f = z_primitive(f_in);
    const int n = z_deg(f);
    std::vector<ZPoly> result;
    if (n <= 0) return result;
    if (n == 1) {
        result.push_back(f);
        return result;
    }

    // prime with squarefree image and unit leading coefficient
    std::int64_t p = 0;
    for (std::int64_t cand = 3;; cand += 2) {
        if (!is_prime_u32(static_cast<std::uint32_t>(cand))) continue;
        if (f.back() % cand == 0) continue;
        ZpPoly fp;
        for (const auto& c : f) {
            mpz_class r = c % cand;
            if (r < 0) r += cand;
            fp.push_back(r.get_si());
        }
        zp_trim(fp);
        if (zp_deg(zp_gcd(fp, zp_derivative(fp, cand), cand)) == 0) {
            p = cand;
            break;
        }
        if (cand > 10000) throw InvariantViolation("zassenhaus: no good prime found");
    }

    ZpPoly fp;
    for (const auto& c : f) {
        mpz_class r = c % p;
        if (r < 0) r += p;
        fp.push_back(r.get_si());
    }
    zp_trim(fp);
    std::vector<ZpPoly> parts = zp_factor_squarefree(zp_monic(fp, p), p, rng);
    std::sort(parts.begin(), parts.end());
    if (parts.size() == 1) {
        result.push_back(f);
        return result;
    }

    // Mignotte-style bound on coefficients of b * (any factor)
    mpz_class norm = 0;
    for (const auto& c : f) norm += c * c;
    mpz_class sq = sqrt(norm) + 1;
    mpz_class bound = abs(f.back()) * sq;
    bound <<= (n + 1);
    unsigned k = 1;
    mpz_class pk(static_cast<long>(p));
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }

    // lift the monic factorization of f / lc(f)
    mpz_class lc = f.back() % pk;
    if (lc < 0) lc += pk;
    mpz_class lcinv;
    if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t()) == 0)
        throw InvariantViolation("zassenhaus: leading coefficient not invertible");
    ZPoly F = zmod_reduce(f, pk);
    for (auto& c : F) c = (c * lcinv) % pk;
    z_trim(F);
    std::vector<ZPoly> lifted;
    hensel_tree(F, parts, 0, parts.size(), p, k, pk, lifted);

    // subset recombination
    std::vector<bool> used(lifted.size(), false);
    ZPoly rem = f;
    std::size_t live = lifted.size();
    for (std::size_t card = 1; card <= live / 2;) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) idx.push_back(i);
        live = idx.size();
        if (card > live / 2) break;
        std::vector<std::size_t> sel(card);
        for (std::size_t i = 0; i < card; ++i) sel[i] = i;
        bool found = false;
        while (true) {
            ZPoly cand{rem.back() % pk};  // lc(rem) * prod of subset, mod p^k
            for (std::size_t i = 0; i < card; ++i) cand = zmod_mul(cand, lifted[idx[sel[i]]], pk);
            for (auto& c : cand) c = symmetric(c, pk);
            z_trim(cand);
            cand = z_primitive(cand);
            ZPoly q;
            if (z_deg(cand) >= 1 && z_try_divexact(rem, cand, q)) {
                result.push_back(cand);
                rem = q;
                for (std::size_t i = 0; i < card; ++i) used[idx[sel[i]]] = true;
                found = true;
                break;
            }
            // next subset of this cardinality
            std::size_t j = card;
            while (j > 0 && sel[j - 1] == idx.size() - card + (j - 1)) --j;
            if (j == 0) break;
            ++sel[j - 1];
            for (std::size_t l = j; l < card; ++l) sel[l] = sel[l - 1] + 1;
        }
        if (!found) ++card;
    }
    if (z_deg(rem) >= 1) result.push_back(z_primitive(rem));
    return result;
}

}  // namespace facdetail

// ---------------------------------------------------------------------------
// public entry point
// ---------------------------------------------------------------------------

namespace facdetail {

// dense univariate view of a polynomial in one effective variable
inline std::vector<Scalar> to_dense(const Polynomial& f, std::size_t var) {
    std::vector<Scalar> c(f.degree_in(var) + 1, Scalar::zero(f.field()));
    for (const auto& t : f.terms()) c[t.mono.exp(var)] = t.coeff;
    return c;
}

inline Polynomial from_dense(const std::vector<Scalar>& c, const FieldTag& field, std::size_t nvars,
                             std::size_t var) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) ts.push_back({c[i], Monomial::variable(nvars, var, static_cast<std::uint32_t>(i))});
    return Polynomial::from_terms(field, nvars, std::move(ts));
}

// factor a univariate (in `var`) polynomial into monic irreducibles
inline std::vector<std::pair<Polynomial, unsigned>> factor_univariate(const Polynomial& f,
                                                                      std::size_t var,
                                                                      std::mt19937_64& rng) {
    const FieldTag field = f.field();
    const std::size_t nvars = f.nvars();
    std::vector<std::pair<Polynomial, unsigned>> out;
    if (field.is_rationals()) {
        // clear denominators; factor the primitive integer polynomial
        std::vector<Scalar> dense = to_dense(f, var);
        mpz_class den_lcm = 1;
        for (const auto& c : dense) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational().get_den_mpz_t());
        ZPoly zf;
        for (const auto& c : dense) {
            mpq_class q = c.rational() * den_lcm;
            zf.push_back(mpz_class(q.get_num()));
        }
        z_trim(zf);
        for (auto& [part, mult] : z_squarefree(z_primitive(zf))) {
            for (auto& irr : zassenhaus(part, rng)) {
                std::vector<Scalar> cs;
                cs.reserve(irr.size());
                for (const auto& c : irr) cs.push_back(Scalar::from_mpz(field, c));
                out.push_back({from_dense(cs, field, nvars, var).monic(), mult});
            }
        }
    } else {
        const std::int64_t p = field.characteristic();
        std::vector<Scalar> dense = to_dense(f, var);
        ZpPoly zf;
        zf.reserve(dense.size());
        for (const auto& c : dense) zf.push_back(c.residue());
        zp_trim(zf);
        for (auto& [irr, mult] : zp_factor(zf, p, rng)) {
            std::vector<Scalar> cs;
            cs.reserve(irr.size());
            for (auto c : irr) cs.push_back(Scalar::from_int(field, c));
            out.push_back({from_dense(cs, field, nvars, var).monic(), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() < b.first.total_degree();
        return canonical_less(a.first, b.first);
    });
    return out;
}

}  // namespace facdetail

// Complete irreducible factorization over the base field.  Multivariate
// inputs go through Kronecker substitution, which is why the total degree is
// capped (UnsupportedDegree beyond the limit).
inline Factorization factor(const Polynomial& f, std::uint64_t seed = 0,
                            const ComputeLimits& limits = global_limits()) {
    using namespace facdetail;
    if (f.is_zero()) throw ValueError("factor: input is zero");
    const FieldTag field = f.field();
    const std::size_t nvars = f.nvars();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

    Factorization result;
    result.unit = f.is_constant() ? f.constant_coefficient() : f.leading_term().coeff;

    if (f.is_constant()) return result;

    // monomial content
    Polynomial work = f;
    for (std::size_t v = 0; v < nvars; ++v) {
        std::uint32_t m = UINT32_MAX;
        for (const auto& t : work.terms()) m = std::min(m, t.mono.exp(v));
        if (m > 0 && m != UINT32_MAX) {
            work = work.exact_divide(Polynomial::term(Scalar::one(field), Monomial::variable(nvars, v, m)));
            result.factors.push_back({Polynomial::variable(field, nvars, v), m});
        }
    }

    std::vector<std::size_t> effective;
    for (std::size_t v = 0; v < nvars; ++v)
        if (work.degree_in(v) > 0) effective.push_back(v);

    if (effective.empty()) {
        // residual constant folds into the unit, which is already lc(f)
        return result;
    }

    std::vector<std::pair<Polynomial, unsigned>> found;
    if (effective.size() == 1) {
        found = factor_univariate(work, effective[0], rng);
    } else {
        if (work.total_degree() > limits.max_factor_degree)
            throw UnsupportedDegree("multivariate factorization beyond the supported total degree " +
                                    std::to_string(limits.max_factor_degree));
        // Kronecker substitution x_j -> x_{e0}^{stride_j}
        std::vector<std::uint64_t> stride(effective.size());
        std::uint64_t acc = 1;
        for (std::size_t j = 0; j < effective.size(); ++j) {
            stride[j] = acc;
            acc *= work.degree_in(effective[j]) + 1;
        }
        if (acc > 60000) throw UnsupportedDegree("Kronecker image degree too large");

        const std::size_t uvar = effective[0];
        std::vector<Term> image_terms;
        for (const auto& t : work.terms()) {
            std::uint64_t e = 0;
            for (std::size_t j = 0; j < effective.size(); ++j)
                e += static_cast<std::uint64_t>(t.mono.exp(effective[j])) * stride[j];
            image_terms.push_back({t.coeff, Monomial::variable(nvars, uvar, static_cast<std::uint32_t>(e))});
        }
        Polynomial image = Polynomial::from_terms(field, nvars, std::move(image_terms));
        auto univ = factor_univariate(image, uvar, rng);

        // decode a univariate candidate back to candidate exponents
        auto decode = [&](const Polynomial& u) {
            std::vector<Term> ts;
            for (const auto& t : u.terms()) {
                std::uint64_t e = t.mono.exp(uvar);
                std::vector<std::uint32_t> exps(nvars, 0);
                for (std::size_t j = 0; j < effective.size(); ++j) {
                    std::uint64_t cap = (j + 1 < effective.size()) ? stride[j + 1] / stride[j]
                                                                   : UINT64_MAX;
                    exps[effective[j]] = static_cast<std::uint32_t>((e / stride[j]) % cap);
                }
                ts.push_back({t.coeff, Monomial(exps)});
            }
            return Polynomial::from_terms(field, nvars, std::move(ts));
        };

        // sub-multiset recombination, smallest image degree first
        std::vector<unsigned> mult;
        for (auto& [u, m] : univ) mult.push_back(m);
        std::uint64_t combos = 1;
        for (auto m : mult) {
            combos *= (m + 1);
            if (combos > (1u << 18)) throw UnsupportedDegree("factor recombination too large");
        }
        Polynomial remaining = work;
        std::vector<unsigned> avail = mult;
        while (true) {
            if (remaining.is_constant()) break;
            // enumerate exponent vectors c <= avail, ascending image degree
            std::vector<std::vector<unsigned>> cands;
            std::vector<unsigned> c(avail.size(), 0);
            while (true) {
                std::size_t j = 0;
                while (j < c.size() && c[j] == avail[j]) {
                    c[j] = 0;
                    ++j;
                }
                if (j == c.size()) break;
                ++c[j];
                cands.push_back(c);
            }
            std::sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
                std::uint64_t da = 0, db = 0;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    da += static_cast<std::uint64_t>(a[i]) * univ[i].first.total_degree();
                    db += static_cast<std::uint64_t>(b[i]) * univ[i].first.total_degree();
                }
                if (da != db) return da < db;
                return a < b;
            });
            bool progressed = false;
            for (const auto& cv : cands) {
                Polynomial uprod = Polynomial::one(field, nvars);
                for (std::size_t i = 0; i < cv.size(); ++i)
                    for (unsigned rpt = 0; rpt < cv[i]; ++rpt) uprod *= univ[i].first;
                Polynomial cand = decode(uprod);
                if (cand.is_constant()) continue;
                if (cand.total_degree() >= remaining.total_degree() &&
                    cand != remaining.monic())
                    continue;
                auto q = remaining.monic().try_exact_divide(cand.monic());
                if (q) {
                    found.push_back({cand.monic(), 1});
                    remaining = remaining.monic().exact_divide(cand.monic());
                    for (std::size_t i = 0; i < cv.size(); ++i) avail[i] -= cv[i];
                    progressed = true;
                    break;
                }
            }
            if (!progressed) {
                found.push_back({remaining.monic(), 1});
                remaining = Polynomial::one(field, nvars);
            }
        }
    }

    // consolidate: true multiplicities by repeated division of the original
    std::vector<Polynomial> distinct;
    for (auto& [p, m] : found) {
        bool seen = false;
        for (const auto& d : distinct)
            if (d == p) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(p);
    }
    Polynomial probe = work.monic();
    for (const auto& d : distinct) {
        unsigned m = 0;
        while (true) {
            auto q = probe.try_exact_divide(d);
            if (!q) break;
            probe = q->monic();
            ++m;
        }
        if (m == 0) throw InvariantViolation("factor: found factor does not divide input");
        result.factors.push_back({d, m});
    }
    if (!probe.is_constant()) throw InvariantViolation("factor: incomplete factorization");

    // verify exact re-expansion
    Polynomial expand = Polynomial::constant(result.unit, nvars);
    for (const auto& [p, m] : result.factors) expand *= p.pow(m);
    if (expand != f) throw InvariantViolation("factor: re-expansion mismatch");
    return result;
}

}  // namespace seminorm

#endif
