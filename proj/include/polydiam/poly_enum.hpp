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
 * @file poly_enum.hpp
 * @brief Enumeration and counting of monic irreducible polynomials and of
 *        prime-power polynomials (powers of a single irreducible), with the
 *        weight lambda(g) = deg h for g = h^k.
 */

#ifndef POLYDIAM_POLY_ENUM_HPP
#define POLYDIAM_POLY_ENUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polydiam/common.hpp"
#include "polydiam/ff.hpp"

namespace polydiam {

/// A monic degree-d prime power g = base^k with weight lambda = deg base.
/// Invariant: lambda * k = d and base is irreducible.
struct WeightedPoly {
    FqPoly poly;
    FqPoly base;
    std::uint32_t k = 1;
    std::uint32_t lambda = 0;

    bool operator==(const WeightedPoly&) const = default;
};

/// Möbius function: (-1)^nu for squarefree s with nu prime factors, else 0.
inline int moebius(std::uint64_t s) {
    if (s < 1) throw precondition_error("moebius: argument must be positive");
    int nu = 0;
    for (std::uint64_t t = 2; t * t <= s; ++t) {
        if (s % t == 0) {
            s /= t;
            if (s % t == 0) return 0;
            ++nu;
        }
    }
    if (s > 1) ++nu;
    return (nu % 2 == 0) ? 1 : -1;
}

inline std::vector<std::uint32_t> divisors_ascending(std::uint32_t d) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 1; e <= d; ++e) {
        if (d % e == 0) out.push_back(e);
    }
    return out;
}

/// Number of monic irreducibles of degree d over F_q:
/// (1/d) * sum over s | d of mu(s) q^{d/s}.  The sum always divides evenly;
/// a remainder signals a bug, not bad input.
inline BigInt count_irreducibles(std::uint64_t q, std::uint32_t d) {
    if (d < 1) throw precondition_error("count_irreducibles: d must be positive");
    BigInt sum = 0;
    for (std::uint32_t s : divisors_ascending(d)) {
        const int mu = moebius(s);
        if (mu == 0) continue;
        BigInt term = boost::multiprecision::pow(BigInt(q), d / s);
        sum += mu * term;
    }
    if (sum % d != 0) throw internal_error("count_irreducibles: Moebius sum not divisible by d");
    return sum / d;
}

/// All monic irreducibles of degree d in canonical (ascending integer code)
/// order.  The cap bounds the number of candidate polynomials q^d.
inline std::vector<FqPoly> enumerate_irreducibles(const BaseField& field, std::uint32_t d,
                                                  std::uint64_t enum_cap = kDefaultEnumCap) {
    if (d < 1) throw precondition_error("enumerate_irreducibles: d must be positive");
    if (boost::multiprecision::pow(BigInt(field.q()), d) > enum_cap) {
        throw resource_error("enumerate_irreducibles: q^d exceeds enumeration cap " + std::to_string(enum_cap) +
                             " (POLYDIAM_ENUM_CAP)");
    }
    const std::uint64_t total = checked_pow_u64(field.q(), d);

    // Cheap trial-division screen by low-degree irreducibles before the full
    // test; pays off on the large binary/ternary enumerations.
    std::vector<FqPoly> screen;
    if (d >= 6 && field.q() <= 9) {
        for (std::uint32_t e = 2; e <= 3; ++e) {
            auto small = enumerate_irreducibles(field, e, enum_cap);
            screen.insert(screen.end(), small.begin(), small.end());
        }
    }

    std::vector<FqPoly> out;
    for (std::uint64_t t = 0; t < total; ++t) {
        FqPoly g = FqPoly::monic_from_index(t, d, field.q());
        if (d > 1) {
            if (g.c[0] == 0) continue;  // divisible by X
            bool smooth = false;
            for (const FqPoly& h : screen) {
                if (poly_mod(g, h, field).is_zero()) {
                    smooth = true;
                    break;
                }
            }
            if (smooth) continue;
        }
        if (irreducibility_test(g, field)) out.push_back(std::move(g));
    }
    return out;
}

/// All monic degree-d prime powers h^{d/e} for e | d, h irreducible of
/// degree e, ordered by e ascending then by the canonical order on h.
inline std::vector<WeightedPoly> enumerate_prime_powers(const BaseField& field, std::uint32_t d,
                                                        std::uint64_t enum_cap = kDefaultEnumCap) {
    if (d < 1) throw precondition_error("enumerate_prime_powers: d must be positive");
    std::vector<WeightedPoly> out;
    for (std::uint32_t e : divisors_ascending(d)) {
        const std::uint32_t k = d / e;
        for (FqPoly& h : enumerate_irreducibles(field, e, enum_cap)) {
            WeightedPoly w;
            w.poly = (k == 1) ? h : poly_pow(h, k, field);
            w.base = std::move(h);
            w.k = k;
            w.lambda = e;
            out.push_back(std::move(w));
        }
    }
    return out;
}

/// The sets I_d and P_d for one (q, d), in canonical order.
struct PolyCatalog {
    std::uint64_t q = 0;
    std::uint32_t d = 0;
    std::vector<FqPoly> irreducibles;
    std::vector<WeightedPoly> prime_powers;
};

inline PolyCatalog make_catalog(const BaseField& field, std::uint32_t d,
                                std::uint64_t enum_cap = kDefaultEnumCap) {
    PolyCatalog cat;
    cat.q = field.q();
    cat.d = d;
    cat.irreducibles = enumerate_irreducibles(field, d, enum_cap);
    cat.prime_powers = enumerate_prime_powers(field, d, enum_cap);
    return cat;
}

}  // namespace polydiam

#endif  // POLYDIAM_POLY_ENUM_HPP
