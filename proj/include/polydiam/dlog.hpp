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
 * @file dlog.hpp
 * @brief Primitive-element search and the discrete-logarithm bijection
 *        between the multiplicative group of the extension field and the
 *        exponent range [0, q^n - 1).
 */

#ifndef POLYDIAM_DLOG_HPP
#define POLYDIAM_DLOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polydiam/common.hpp"
#include "polydiam/ff.hpp"

namespace polydiam {

/// Distinct prime factors by trial division up to factor_cap.  A leftover
/// cofactor above the cap is accepted only if it is itself prime.
inline std::vector<std::uint64_t> distinct_prime_factors_u64(std::uint64_t n,
                                                             std::uint64_t factor_cap = kDefaultFactorCap) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 2; t * t <= n && t <= factor_cap; ++t) {
        if (n % t == 0) {
            out.push_back(t);
            while (n % t == 0) n /= t;
        }
    }
    if (n > 1) {
        if (!is_prime_u64(n)) {
            throw resource_error("distinct_prime_factors_u64: cofactor " + std::to_string(n) +
                                 " not factorable within trial-division cap " + std::to_string(factor_cap) +
                                 " (POLYDIAM_FACTOR_CAP)");
        }
        out.push_back(n);
    }
    return out;
}

/// First element in canonical residue-code order whose multiplicative order
/// is the full group order N = q^n - 1, certified by gamma^{N/l} != 1 for
/// every prime l | N.
inline ExtElem find_primitive(const FieldContext& ctx, std::uint64_t factor_cap = kDefaultFactorCap) {
    const std::uint64_t N = ctx.group_order();
    if (N == 1) return ctx.one();  // trivial group: q^n = 2
    const auto primes = distinct_prime_factors_u64(N, factor_cap);
    for (std::uint64_t code = 1; code <= N; ++code) {
        ExtElem cand = ctx.from_code(code);
        bool primitive = true;
        for (std::uint64_t l : primes) {
            if (ctx.pow(cand, N / l) == ctx.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return cand;
    }
    throw internal_error("find_primitive: no primitive element found (impossible in a finite field)");
}

/// Bijection between the multiplicative group and exponents of a primitive
/// element: log(gamma^t) = t, exp(t) = gamma^t.  Immutable after
/// construction; lookups are O(1) array reads.
class DlogTable {
public:
    explicit DlogTable(const FieldContext& ctx, std::uint64_t max_order = kDefaultMaxOrder,
                       std::uint64_t factor_cap = kDefaultFactorCap)
        : ctx_(&ctx), order_(ctx.group_order()) {
        if (order_ > max_order) {
            throw resource_error("DlogTable: group order " + std::to_string(order_) + " exceeds cap " +
                                 std::to_string(max_order) + " (POLYDIAM_MAX_ORDER)");
        }
        if (ctx.ext_order() > static_cast<std::uint64_t>(UINT32_MAX)) {
            throw resource_error("DlogTable: field order does not fit 32-bit indexing");
        }
        generator_ = find_primitive(ctx, factor_cap);
        prime_factors_ = order_ > 1 ? distinct_prime_factors_u64(order_, factor_cap) : std::vector<std::uint64_t>{};

        log_.assign(ctx.ext_order(), kUnset);
        exp_.assign(order_, 0);
        ExtElem cur = ctx.one();
        for (std::uint64_t t = 0; t < order_; ++t) {
            const std::uint64_t code = ctx.code(cur);
            if (t > 0 && code == 1) throw internal_error("DlogTable: generator order divides " + std::to_string(t));
            if (log_[code] != kUnset) throw internal_error("DlogTable: repeated code before full cycle");
            log_[code] = static_cast<std::uint32_t>(t);
            exp_[t] = static_cast<std::uint32_t>(code);
            cur = ctx.mul(cur, generator_);
        }
        if (!(cur == ctx.one())) throw internal_error("DlogTable: generator^order != 1");
    }

    const FieldContext& context() const { return *ctx_; }
    const ExtElem& generator() const { return generator_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint64_t>& order_prime_factors() const { return prime_factors_; }

    std::uint64_t log(const ExtElem& a) const { return log_code(ctx_->code(a)); }

    std::uint64_t log_code(std::uint64_t code) const {
        if (code == 0) throw std::domain_error("DlogTable::log: zero has no discrete logarithm");
        if (code >= log_.size() || log_[code] == kUnset) {
            throw precondition_error("DlogTable::log: code out of range");
        }
        return log_[code];
    }

    ExtElem exp(std::uint64_t t) const { return ctx_->from_code(exp_code(t)); }

    std::uint64_t exp_code(std::uint64_t t) const {
        if (t >= order_) throw precondition_error("DlogTable::exp: exponent out of range");
        return exp_[t];
    }

private:
    static constexpr std::uint32_t kUnset = UINT32_MAX;

    const FieldContext* ctx_;
    std::uint64_t order_;
    ExtElem generator_;
    std::vector<std::uint64_t> prime_factors_;
    std::vector<std::uint32_t> log_;  // residue code -> exponent; code 0 stays unset
    std::vector<std::uint32_t> exp_;  // exponent -> residue code
};

}  // namespace polydiam

#endif  // POLYDIAM_DLOG_HPP
