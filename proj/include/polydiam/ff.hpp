/*
   Copyright 2026 The polydiam authors

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

/**
 * @file ff.hpp
 * @brief Exact arithmetic in F_q (q = p^s) and in the extension
 *        F_{q^n} = F_q[X]/(f), plus irreducibility testing.
 *
 * Representation conventions:
 *  - An element of F_q is a canonical integer code in [0, q).  For s = 1 the
 *    code is the residue mod p; for s > 1 it is sum c_i p^i over the
 *    polynomial basis defined by a monic irreducible base modulus over F_p.
 *  - A polynomial over F_q stores its coefficient codes in ascending degree
 *    with no trailing zeros (the zero polynomial is the empty sequence).
 *  - The canonical order on monic degree-d polynomials is by the integer
 *    code sum c_i q^i of the lower coefficients; enumeration, modulus
 *    selection and all file outputs use this order.
 */

#ifndef POLYDIAM_FF_HPP
#define POLYDIAM_FF_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polydiam/common.hpp"

namespace polydiam {

using BaseElem = std::uint32_t;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, valid for every 64-bit input.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// q = p^s with overflow checking; throws precondition_error on overflow past 2^63.
inline std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::uint64_t(1) << 62) / base) {
            throw precondition_error("checked_pow_u64: value exceeds 2^62");
        }
        r *= base;
    }
    return r;
}

/// Base field parameters: q = p^s with the defining base modulus when s > 1.
struct FieldParams {
    std::uint64_t p = 0;
    std::uint32_t s = 1;
    std::uint64_t q = 0;
    std::vector<BaseElem> base_modulus;  // over F_p, ascending, size s+1, monic; empty iff s == 1
};

/// A polynomial over F_q: coefficient codes in ascending degree, normalized
/// so the leading coefficient is nonzero (zero polynomial == empty).
struct FqPoly {
    std::vector<BaseElem> c;

    FqPoly() = default;
    explicit FqPoly(std::vector<BaseElem> coeffs) : c(std::move(coeffs)) { normalize(); }

    static FqPoly zero() { return FqPoly{}; }
    static FqPoly one() { return FqPoly{{1}}; }
    static FqPoly x() { return FqPoly{{0, 1}}; }

    /// Monic degree-d polynomial whose lower coefficients are the base-q
    /// digits of t; t in [0, q^d) enumerates all of them in canonical order.
    static FqPoly monic_from_index(std::uint64_t t, std::uint32_t d, std::uint64_t q) {
        std::vector<BaseElem> cs(d + 1, 0);
        for (std::uint32_t i = 0; i < d; ++i) {
            cs[i] = static_cast<BaseElem>(t % q);
            t /= q;
        }
        cs[d] = 1;
        return FqPoly{std::move(cs)};
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    BaseElem coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    /// Integer code sum c_i q^i over all coefficients (leading included).
    std::uint64_t code(std::uint64_t q) const {
        std::uint64_t r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * q + c[i];
        return r;
    }

    bool operator==(const FqPoly&) const = default;

    /// Text form used by the CLI and all file formats: "1,1,0,1" = 1 + X + X^3.
    std::string to_string() const {
        if (c.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        return os.str();
    }

    static FqPoly from_string(const std::string& text, std::uint64_t q) {
        std::vector<BaseElem> cs;
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t pos = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(tok, &pos);
            } catch (const std::exception&) {
                throw precondition_error("polynomial literal: bad coefficient '" + tok + "'");
            }
            if (pos != tok.size()) throw precondition_error("polynomial literal: bad coefficient '" + tok + "'");
            if (v >= q) throw precondition_error("polynomial literal: coefficient " + tok + " out of range for q");
            cs.push_back(static_cast<BaseElem>(v));
        }
        if (cs.empty()) throw precondition_error("polynomial literal: empty");
        return FqPoly{std::move(cs)};
    }
};

class BaseField;
bool irreducibility_test(const FqPoly& g, const BaseField& field);
FqPoly first_irreducible(const BaseField& field, std::uint32_t degree, std::uint64_t enum_cap);

/// Arithmetic engine for F_q.  Immutable after construction; all operations
/// are pure and safe to call concurrently.
class BaseField {
public:
    /// Prime field F_p.
    explicit BaseField(std::uint64_t p) : BaseField(p, 1, {}) {}

    /// F_{p^s}; when no base modulus is given and s > 1 the canonically first
    /// monic irreducible of degree s over F_p is chosen.
    BaseField(std::uint64_t p, std::uint32_t s) : BaseField(p, s, pick_modulus(p, s)) {}

    BaseField(std::uint64_t p, std::uint32_t s, std::vector<BaseElem> base_modulus) {
        if (!is_prime_u64(p)) throw precondition_error("BaseField: p = " + std::to_string(p) + " is not prime");
        if (s < 1) throw precondition_error("BaseField: s must be positive");
        params_.p = p;
        params_.s = s;
        params_.q = checked_pow_u64(p, s);
        if (s == 1) {
            if (!base_modulus.empty()) throw precondition_error("BaseField: base modulus given for s = 1");
        } else {
            validate_modulus(p, s, base_modulus);
            params_.base_modulus = std::move(base_modulus);
            build_tables();
        }
    }

    /// Factor q = p^s (unique) and construct the canonical field of that order.
    static BaseField from_order(std::uint64_t q) {
        if (q < 2) throw precondition_error("BaseField: q must be at least 2");
        std::uint64_t p = q;
        for (std::uint64_t t = 2; t * t <= q; ++t) {
            if (q % t == 0) {
                p = t;
                break;
            }
        }
        std::uint32_t s = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++s;
        }
        if (r != 1) throw precondition_error("BaseField: q = " + std::to_string(q) + " is not a prime power");
        return s == 1 ? BaseField(p) : BaseField(p, s);
    }

    const FieldParams& params() const { return params_; }
    std::uint64_t p() const { return params_.p; }
    std::uint32_t s() const { return params_.s; }
    std::uint64_t q() const { return params_.q; }

    BaseElem zero() const { return 0; }
    BaseElem one() const { return 1; }

    BaseElem add(BaseElem a, BaseElem b) const {
        if (params_.s == 1) {
            std::uint64_t r = std::uint64_t(a) + b;
            if (r >= params_.p) r -= params_.p;
            return static_cast<BaseElem>(r);
        }
        if (!add_table_.empty()) return add_table_[std::size_t(a) * params_.q + b];
        return add_digits(a, b);
    }

    BaseElem neg(BaseElem a) const {
        if (params_.s == 1) return a == 0 ? 0 : static_cast<BaseElem>(params_.p - a);
        if (params_.p == 2) return a;  // characteristic 2
        std::uint64_t pw = 1;
        std::uint64_t r = 0;
        for (std::uint32_t i = 0; i < params_.s; ++i) {
            std::uint64_t digit = (a / pw) % params_.p;
            r += (digit ? params_.p - digit : 0) * pw;
            pw *= params_.p;
        }
        return static_cast<BaseElem>(r);
    }

    BaseElem sub(BaseElem a, BaseElem b) const { return add(a, neg(b)); }

    BaseElem mul(BaseElem a, BaseElem b) const {
        if (params_.s == 1) return static_cast<BaseElem>((std::uint64_t(a) * b) % params_.p);
        if (!mul_table_.empty()) return mul_table_[std::size_t(a) * params_.q + b];
        return mul_digits(a, b);
    }

    BaseElem inv(BaseElem a) const {
        if (a == 0) throw std::domain_error("BaseField::inv: inversion of zero");
        if (params_.s == 1) {
            // extended Euclid on (a, p)
            std::int64_t t = 0, t1 = 1;
            std::int64_t r = static_cast<std::int64_t>(params_.p), r1 = a;
            while (r1 != 0) {
                std::int64_t qq = r / r1;
                std::int64_t tmp = t - qq * t1;
                t = t1;
                t1 = tmp;
                tmp = r - qq * r1;
                r = r1;
                r1 = tmp;
            }
            if (t < 0) t += static_cast<std::int64_t>(params_.p);
            return static_cast<BaseElem>(t);
        }
        if (!inv_table_.empty()) return inv_table_[a];
        return inv_digits(a);
    }

    BaseElem pow(BaseElem a, std::uint64_t e) const {
        BaseElem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

private:
    static constexpr std::uint64_t kTableCap = 2048;  // q*q lookup tables below this

    FieldParams params_;
    std::vector<BaseElem> add_table_;  // q*q, s > 1 only
    std::vector<BaseElem> mul_table_;  // q*q, s > 1 only
    std::vector<BaseElem> inv_table_;  // q,   s > 1 only

    static std::vector<BaseElem> pick_modulus(std::uint64_t p, std::uint32_t s);
    void validate_modulus(std::uint64_t p, std::uint32_t s, const std::vector<BaseElem>& m) const;

    std::vector<BaseElem> to_digits(BaseElem a) const {
        std::vector<BaseElem> d(params_.s);
        for (std::uint32_t i = 0; i < params_.s; ++i) {
            d[i] = static_cast<BaseElem>(a % params_.p);
            a = static_cast<BaseElem>(a / params_.p);
        }
        return d;
    }

    BaseElem from_digits(const std::vector<BaseElem>& d) const {
        std::uint64_t r = 0;
        for (std::size_t i = params_.s; i-- > 0;) r = r * params_.p + (i < d.size() ? d[i] : 0);
        return static_cast<BaseElem>(r);
    }

    BaseElem add_digits(BaseElem a, BaseElem b) const {
        std::uint64_t pw = 1, r = 0;
        for (std::uint32_t i = 0; i < params_.s; ++i) {
            std::uint64_t da = (a / pw) % params_.p, db = (b / pw) % params_.p;
            std::uint64_t dsum = da + db;
            if (dsum >= params_.p) dsum -= params_.p;
            r += dsum * pw;
            pw *= params_.p;
        }
        return static_cast<BaseElem>(r);
    }

    BaseElem mul_digits(BaseElem a, BaseElem b) const {
        const std::uint32_t s = params_.s;
        const std::uint64_t p = params_.p;
        std::vector<std::uint64_t> prod(2 * s - 1, 0);
        std::vector<BaseElem> da = to_digits(a), db = to_digits(b);
        for (std::uint32_t i = 0; i < s; ++i) {
            if (!da[i]) continue;
            for (std::uint32_t j = 0; j < s; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
        }
        // reduce by the monic base modulus: X^s = -(m_0 + ... + m_{s-1} X^{s-1})
        for (std::size_t i = 2 * s - 2; i >= s; --i) {
            std::uint64_t t = prod[i] % p;
            prod[i] = 0;
            if (!t) continue;
            for (std::uint32_t j = 0; j < s; ++j) {
                std::uint64_t subtrahend = (t * params_.base_modulus[j]) % p;
                prod[i - s + j] += p - subtrahend;  // add the negation mod p
            }
        }
        std::vector<BaseElem> out(s);
        for (std::uint32_t i = 0; i < s; ++i) out[i] = static_cast<BaseElem>(prod[i] % p);
        return from_digits(out);
    }

    BaseElem inv_digits(BaseElem a) const;  // extended Euclid on digit polynomials (defined below)

    void build_tables() {
        if (params_.q > kTableCap) return;
        const std::size_t q = params_.q;
        add_table_.resize(q * q);
        mul_table_.resize(q * q);
        inv_table_.assign(q, 0);
        for (std::size_t x = 0; x < q; ++x) {
            for (std::size_t y = 0; y < q; ++y) {
                add_table_[x * q + y] = add_digits(static_cast<BaseElem>(x), static_cast<BaseElem>(y));
                BaseElem m = mul_digits(static_cast<BaseElem>(x), static_cast<BaseElem>(y));
                mul_table_[x * q + y] = m;
                if (m == 1) inv_table_[x] = static_cast<BaseElem>(y);
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Polynomial arithmetic over a base field.
// ---------------------------------------------------------------------------

inline FqPoly poly_add(const FqPoly& a, const FqPoly& b, const BaseField& F) {
    std::vector<BaseElem> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return FqPoly{std::move(c)};
}

inline FqPoly poly_sub(const FqPoly& a, const FqPoly& b, const BaseField& F) {
    std::vector<BaseElem> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
    return FqPoly{std::move(c)};
}

inline FqPoly poly_mul(const FqPoly& a, const FqPoly& b, const BaseField& F) {
    if (a.is_zero() || b.is_zero()) return FqPoly::zero();
    std::vector<BaseElem> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    return FqPoly{std::move(c)};
}

inline FqPoly poly_scale(const FqPoly& a, BaseElem k, const BaseField& F) {
    std::vector<BaseElem> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.mul(a.c[i], k);
    return FqPoly{std::move(c)};
}

/// Division with remainder; b must be nonzero.
inline void poly_divmod(const FqPoly& a, const FqPoly& b, const BaseField& F, FqPoly& quo, FqPoly& rem) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by the zero polynomial");
    rem = a;
    if (a.degree() < b.degree()) {
        quo = FqPoly::zero();
        return;
    }
    std::vector<BaseElem> qc(a.degree() - b.degree() + 1, 0);
    const BaseElem lead_inv = F.inv(b.c.back());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const BaseElem factor = F.mul(rem.c.back(), lead_inv);
        qc[shift] = factor;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(factor, b.c[i]));
        }
        rem.normalize();
    }
    quo = FqPoly{std::move(qc)};
}

inline FqPoly poly_mod(const FqPoly& a, const FqPoly& b, const BaseField& F) {
    FqPoly q, r;
    poly_divmod(a, b, F, q, r);
    return r;
}

/// Monic gcd.
inline FqPoly poly_gcd(FqPoly a, FqPoly b, const BaseField& F) {
    while (!b.is_zero()) {
        FqPoly r = poly_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() != 1) a = poly_scale(a, F.inv(a.c.back()), F);
    return a;
}

/// a^k by repeated squaring (k small, e.g. prime-power reconstruction).
inline FqPoly poly_pow(const FqPoly& a, std::uint32_t k, const BaseField& F) {
    FqPoly r = FqPoly::one(), base = a;
    while (k) {
        if (k & 1) r = poly_mul(r, base, F);
        base = poly_mul(base, base, F);
        k >>= 1;
    }
    return r;
}

/// base^e mod m with a 64-bit exponent.
inline FqPoly poly_powmod(const FqPoly& base, std::uint64_t e, const FqPoly& m, const BaseField& F) {
    FqPoly r = FqPoly::one(), b = poly_mod(base, m, F);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, b, F), m, F);
        b = poly_mod(poly_mul(b, b, F), m, F);
        e >>= 1;
    }
    return r;
}

inline BaseElem poly_eval(const FqPoly& g, BaseElem x, const BaseField& F) {
    BaseElem r = 0;
    for (std::size_t i = g.c.size(); i-- > 0;) r = F.add(F.mul(r, x), g.c[i]);
    return r;
}

inline std::vector<std::uint32_t> distinct_prime_factors_u32(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 2; t * t <= n; ++t) {
        if (n % t == 0) {
            out.push_back(t);
            while (n % t == 0) n /= t;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Deterministic irreducibility test for a monic polynomial over F_q:
/// g of degree d is irreducible iff X^{q^d} = X (mod g) and
/// gcd(X^{q^{d/l}} - X, g) = 1 for every prime l dividing d.
inline bool irreducibility_test(const FqPoly& g, const BaseField& field) {
    if (g.is_zero() || !g.is_monic()) throw precondition_error("irreducibility_test: input must be monic");
    const int d = g.degree();
    if (d < 1) throw precondition_error("irreducibility_test: degree must be at least 1");
    if (d == 1) return true;
    if (g.c[0] == 0) return false;  // divisible by X
    // root screen over small fields; kills every candidate with a linear factor
    if (field.q() <= 64) {
        for (std::uint64_t x = 0; x < field.q(); ++x) {
            if (poly_eval(g, static_cast<BaseElem>(x), field) == 0) return false;
        }
    }
    const auto primes = distinct_prime_factors_u32(static_cast<std::uint32_t>(d));
    std::vector<bool> checkpoint(d + 1, false);
    for (std::uint32_t l : primes) checkpoint[d / l] = true;
    const FqPoly x = FqPoly::x();
    FqPoly cur = x;
    for (int i = 1; i <= d; ++i) {
        cur = poly_powmod(cur, field.q(), g, field);  // now cur = X^{q^i} mod g
        if (i == d) return cur == x;
        if (checkpoint[i]) {
            FqPoly h = poly_gcd(poly_sub(cur, x, field), g, field);
            if (h.degree() != 0) return false;
        }
    }
    return cur == x;
}

/// Canonically first monic irreducible of the given degree.
inline FqPoly first_irreducible(const BaseField& field, std::uint32_t degree, std::uint64_t enum_cap = kDefaultEnumCap) {
    if (degree < 1) throw precondition_error("first_irreducible: degree must be positive");
    const std::uint64_t total = checked_pow_u64(field.q(), degree);
    if (total > enum_cap) {
        throw resource_error("first_irreducible: q^degree exceeds enumeration cap " + std::to_string(enum_cap));
    }
    for (std::uint64_t t = 0; t < total; ++t) {
        FqPoly g = FqPoly::monic_from_index(t, degree, field.q());
        if (irreducibility_test(g, field)) return g;
    }
    throw internal_error("first_irreducible: no irreducible found (impossible)");
}

inline std::vector<BaseElem> BaseField::pick_modulus(std::uint64_t p, std::uint32_t s) {
    if (s == 1) return {};
    BaseField fp(p);
    return first_irreducible(fp, s).c;
}

inline void BaseField::validate_modulus(std::uint64_t p, std::uint32_t s, const std::vector<BaseElem>& m) const {
    if (m.size() != std::size_t(s) + 1 || m.back() != 1) {
        throw precondition_error("BaseField: base modulus must be monic of degree s");
    }
    for (BaseElem c : m) {
        if (c >= p) throw precondition_error("BaseField: base modulus coefficient out of range");
    }
    BaseField fp(p);
    if (!irreducibility_test(FqPoly{std::vector<BaseElem>(m)}, fp)) {
        throw precondition_error("BaseField: base modulus is reducible over F_p");
    }
}

inline BaseElem BaseField::inv_digits(BaseElem a) const {
    // extended Euclid on (a as digit polynomial, base modulus) over F_p
    BaseField fp(params_.p);
    FqPoly r0{std::vector<BaseElem>(params_.base_modulus)};
    FqPoly r1{to_digits(a)};
    FqPoly t0 = FqPoly::zero(), t1 = FqPoly::one();
    while (!r1.is_zero()) {
        FqPoly qq, rr;
        poly_divmod(r0, r1, fp, qq, rr);
        FqPoly tn = poly_sub(t0, poly_mul(qq, t1, fp), fp);
        r0 = std::move(r1);
        r1 = std::move(rr);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    // r0 is a nonzero constant gcd; scale t0 by its inverse
    if (r0.degree() != 0) throw internal_error("BaseField::inv_digits: gcd not constant");
    FqPoly result = poly_scale(t0, fp.inv(r0.c[0]), fp);
    return from_digits(result.c);
}

// ---------------------------------------------------------------------------
// The extension F_{q^n} = F_q[X]/(f).
// ---------------------------------------------------------------------------

/// Element of F_{q^n}: residue coefficients over F_q, exactly n entries.
struct ExtElem {
    std::vector<BaseElem> c;
    bool operator==(const ExtElem&) const = default;
};

/// Owns the modulus f and all extension arithmetic.  The residue class of X
/// is the distinguished root alpha.  Immutable after construction.
class FieldContext {
public:
    FieldContext(BaseField base, std::uint32_t n, FqPoly modulus_f)
        : base_(std::move(base)), n_(n), f_(std::move(modulus_f)) {
        if (n_ < 1) throw precondition_error("FieldContext: n must be positive");
        if (f_.degree() != static_cast<int>(n_) || !f_.is_monic()) {
            throw precondition_error("FieldContext: modulus must be monic of degree n");
        }
        for (BaseElem c : f_.c) {
            if (c >= base_.q()) throw precondition_error("FieldContext: modulus coefficient out of range for q");
        }
        if (!irreducibility_test(f_, base_)) {
            throw precondition_error("FieldContext: modulus is reducible over F_q");
        }
        ext_order_ = checked_pow_u64(base_.q(), n_);
        fc_.assign(n_ + 1, 0);
        for (std::uint32_t i = 0; i <= n_; ++i) fc_[i] = f_.coeff(i);
        if (!is_zero(eval_modulus_at_alpha())) throw internal_error("FieldContext: f(alpha) != 0");
    }

    FieldContext(BaseField base, std::uint32_t n) : FieldContext(pick(std::move(base), n)) {}

    const BaseField& base() const { return base_; }
    std::uint32_t n() const { return n_; }
    const FqPoly& modulus() const { return f_; }
    std::uint64_t q() const { return base_.q(); }
    std::uint64_t ext_order() const { return ext_order_; }     // q^n
    std::uint64_t group_order() const { return ext_order_ - 1; }  // |F_{q^n}^*|

    ExtElem zero() const { return ExtElem{std::vector<BaseElem>(n_, 0)}; }

    ExtElem one() const {
        ExtElem e = zero();
        e.c[0] = 1;
        return e;
    }

    /// The residue class of X (for n = 1 this reduces X mod f).
    ExtElem alpha() const { return from_poly(FqPoly::x()); }

    bool is_zero(const ExtElem& a) const {
        return std::all_of(a.c.begin(), a.c.end(), [](BaseElem v) { return v == 0; });
    }

    /// Reduce an arbitrary polynomial mod f into an element.
    ExtElem from_poly(const FqPoly& g) const {
        FqPoly r = g.degree() < static_cast<int>(n_) ? g : poly_mod(g, f_, base_);
        ExtElem e = zero();
        for (std::size_t i = 0; i < r.c.size(); ++i) e.c[i] = r.c[i];
        return e;
    }

    /// Residue embedding of g with the regime guard deg g < n, which also
    /// guarantees g(alpha) != 0 for nonzero g.
    ExtElem evaluate_at_alpha(const FqPoly& g) const {
        if (g.degree() >= static_cast<int>(n_)) {
            throw precondition_error("evaluate_at_alpha: deg g must be < n");
        }
        ExtElem e = zero();
        for (std::size_t i = 0; i < g.c.size(); ++i) e.c[i] = g.c[i];
        return e;
    }

    FqPoly to_poly(const ExtElem& a) const { return FqPoly{std::vector<BaseElem>(a.c)}; }

    /// Canonical code sum c_i q^i in [0, q^n).
    std::uint64_t code(const ExtElem& a) const {
        std::uint64_t r = 0;
        for (std::size_t i = n_; i-- > 0;) r = r * base_.q() + a.c[i];
        return r;
    }

    ExtElem from_code(std::uint64_t code) const {
        ExtElem e = zero();
        for (std::uint32_t i = 0; i < n_; ++i) {
            e.c[i] = static_cast<BaseElem>(code % base_.q());
            code /= base_.q();
        }
        return e;
    }

    ExtElem add(const ExtElem& a, const ExtElem& b) const {
        ExtElem r = zero();
        for (std::uint32_t i = 0; i < n_; ++i) r.c[i] = base_.add(a.c[i], b.c[i]);
        return r;
    }

    ExtElem sub(const ExtElem& a, const ExtElem& b) const {
        ExtElem r = zero();
        for (std::uint32_t i = 0; i < n_; ++i) r.c[i] = base_.sub(a.c[i], b.c[i]);
        return r;
    }

    ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        std::vector<BaseElem> prod(2 * n_ - 1, 0);
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (!a.c[i]) continue;
            for (std::uint32_t j = 0; j < n_; ++j) {
                if (!b.c[j]) continue;
                prod[i + j] = base_.add(prod[i + j], base_.mul(a.c[i], b.c[j]));
            }
        }
        reduce_in_place(prod);
        ExtElem r = zero();
        for (std::uint32_t i = 0; i < n_; ++i) r.c[i] = prod[i];
        return r;
    }

    /// Extended Euclid on (residue, f); throws on zero input.
    ExtElem inv(const ExtElem& a) const {
        if (is_zero(a)) throw std::domain_error("FieldContext::inv: inversion of zero");
        FqPoly r0 = f_, r1 = to_poly(a);
        r1.normalize();
        FqPoly t0 = FqPoly::zero(), t1 = FqPoly::one();
        while (!r1.is_zero()) {
            FqPoly qq, rr;
            poly_divmod(r0, r1, base_, qq, rr);
            FqPoly tn = poly_sub(t0, poly_mul(qq, t1, base_), base_);
            r0 = std::move(r1);
            r1 = std::move(rr);
            t0 = std::move(t1);
            t1 = std::move(tn);
        }
        if (r0.degree() != 0) throw internal_error("FieldContext::inv: gcd not constant");
        return from_poly(poly_scale(t0, base_.inv(r0.c[0]), base_));
    }

    ExtElem pow(ExtElem a, std::uint64_t e) const {
        ExtElem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::string to_string(const ExtElem& a) const {
        std::ostringstream os;
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (i) os << ',';
            os << a.c[i];
        }
        return os.str();
    }

private:
    BaseField base_;
    std::uint32_t n_;
    FqPoly f_;
    std::vector<BaseElem> fc_;  // f padded to n+1 coefficients
    std::uint64_t ext_order_ = 0;

    static FieldContext pick(BaseField base, std::uint32_t n) {
        FqPoly f = first_irreducible(base, n);
        return FieldContext(std::move(base), n, std::move(f));
    }

    void reduce_in_place(std::vector<BaseElem>& prod) const {
        // monic modulus: X^n = -(f_0 + ... + f_{n-1} X^{n-1})
        for (std::size_t i = prod.size(); i-- > n_;) {
            const BaseElem t = prod[i];
            if (!t) continue;
            prod[i] = 0;
            for (std::uint32_t j = 0; j < n_; ++j) {
                prod[i - n_ + j] = base_.sub(prod[i - n_ + j], base_.mul(t, fc_[j]));
            }
        }
    }

    ExtElem eval_modulus_at_alpha() const {
        ExtElem acc = zero();
        ExtElem a = alpha();
        for (std::size_t i = fc_.size(); i-- > 0;) {
            acc = mul(acc, a);
            ExtElem cst = zero();
            cst.c[0] = fc_[i];
            acc = add(acc, cst);
        }
        return acc;
    }
};

}  // namespace polydiam

#endif  // POLYDIAM_FF_HPP
