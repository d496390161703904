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

// Closed-form diameter bounds with exact precondition checking.
//
// All logarithms are natural.  Every bound is gated by its precondition,
// checked in exact integer arithmetic ((n-1)^2 < q^d rather than a float
// comparison against q^{d/2}); a failed precondition yields a typed
// "not applicable" value, never an exception, so parameter sweeps can
// cross boundary cells without aborting.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "polydiam/cayley.hpp"
#include "polydiam/common.hpp"
#include "polydiam/ff.hpp"

namespace polydiam {

// A bound evaluation: either a finite value or the precondition that failed.
struct BoundValue {
    std::optional<double> value;
    std::string note;  // empty when applicable, else the failed precondition

    bool applicable() const noexcept { return value.has_value(); }
};

struct BoundInput {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::uint32_t m = 0;  // ceil(n/d) - 1, so m*d < n <= (m+1)*d
};

inline BoundInput make_bound_input(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    if (q < 2 || n < 1 || d < 1) {
        throw precondition_error("make_bound_input: require q >= 2, n >= 1, d >= 1");
    }
    BoundInput in;
    in.q = q;
    in.n = n;
    in.d = d;
    in.m = moment_exponent(n, d);
    const std::uint64_t md = static_cast<std::uint64_t>(in.m) * d;
    if (!(md < n && n <= md + d)) throw internal_error("make_bound_input: moment exponent bracket violated");
    return in;
}

namespace detail {

// (n-1)^2 < q^d, evaluated exactly.
inline bool below_half_power(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    const BigInt gap = BigInt(n) - 1;
    return gap * gap < boost::multiprecision::pow(BigInt(q), d);
}

}  // namespace detail

inline BoundValue bound_lwwz(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    if (n < 2) return {std::nullopt, "requires n >= 2"};
    if (!detail::below_half_power(q, n, d)) return {std::nullopt, "requires n < q^{d/2} + 1"};
    const double L = std::log(static_cast<double>(n - 1));
    const double denom = d * std::log(static_cast<double>(q)) - 2.0 * L;
    const double value = (2.0 * n / d) * (1.0 + 2.0 * L / denom) + 1.0;
    return {value, ""};
}

inline BoundValue bound_thm1(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    if (d < 2) return {std::nullopt, "requires d >= 2"};
    if (n < 2 * d + 1) return {std::nullopt, "requires n >= 2d + 1"};
    if (!detail::below_half_power(q, n, d)) return {std::nullopt, "requires n < q^{d/2} + 1"};
    const double L = std::log(static_cast<double>(n - 1));
    const double denom = d * std::log(static_cast<double>(q)) - 2.0 * L;
    const double value = (2.0 * n / d) * (1.0 + (L - 1.0) / denom) + (4.0 * L + 7.0) / denom;
    return {value, ""};
}

// Degree-one bound.  Deliberately self-contained: it shares no formula
// helper with bound_thm1, so a transcription slip in one cannot hide in
// the other.
inline BoundValue bound_thm2(std::uint64_t q, std::uint32_t n) {
    if (n < 3) return {std::nullopt, "requires n >= 3"};
    const BigInt gap = BigInt(n) - 1;
    if (!(gap * gap < BigInt(q))) return {std::nullopt, "requires n < q^{1/2} + 1"};
    const double logq = std::log(static_cast<double>(q));
    const double logn1 = std::log(static_cast<double>(n - 1));
    const double bottom = logq - 2.0 * logn1;
    const double main = 2.0 * static_cast<double>(n) * (1.0 + (logn1 - 1.0) / bottom);
    return {main + (3.0 * logn1 + 3.0) / bottom, ""};
}

// Classical degree-one result: diameter <= n + 2 once q clears an explicit
// (astronomically large) threshold.  Informational only; the group sizes
// involved are far beyond BFS reach, so no empirical check is attempted.
struct KatzCohenInfo {
    bool applicable = false;
    std::uint32_t bound = 0;       // n + 2
    BigInt threshold;              // (n * (n+2)!)^2
};

inline KatzCohenInfo katz_cohen_info(std::uint64_t q, std::uint32_t n) {
    KatzCohenInfo info;
    info.bound = n + 2;
    const BigInt base = BigInt(n) * factorial_big(n + 2);
    info.threshold = base * base;
    info.applicable = BigInt(q) >= info.threshold;
    return info;
}

// Leading constants of the diameter bound when n grows like q^{theta * d}.
struct AsymptoticConstants {
    double improved = 0.0;  // (2 - 2*theta) / (1 - 2*theta)
    double old = 0.0;       // 2 / (1 - 2*theta)
};

inline AsymptoticConstants asymptotic_constants(double theta) {
    if (!(theta > 0.0 && theta < 0.5)) {
        throw std::domain_error("asymptotic_constants: theta must lie in (0, 1/2)");
    }
    AsymptoticConstants c;
    c.improved = (2.0 - 2.0 * theta) / (1.0 - 2.0 * theta);
    c.old = 2.0 / (1.0 - 2.0 * theta);
    return c;
}

// Empirical placement of an instance on the theta scale: n = q^{theta * d}.
inline double theta_of(std::uint64_t q, std::uint32_t n, std::uint32_t d) {
    if (q < 2 || n < 1 || d < 1) throw precondition_error("theta_of: require q >= 2, n >= 1, d >= 1");
    return std::log(static_cast<double>(n)) / (d * std::log(static_cast<double>(q)));
}

struct BoundReport {
    BoundInput input;
    BoundValue lwwz;
    BoundValue thm1;
    BoundValue thm2;  // populated only for d = 1
    KatzCohenInfo katz;
    std::optional<std::uint32_t> exact_diameter;
    // set only when both the bound and the exact diameter are present
    std::optional<bool> lwwz_violated;
    std::optional<bool> thm1_violated;
    std::optional<bool> thm2_violated;
};

inline BoundReport compare(const FieldContext& ctx, std::uint32_t d, bool run_bfs,
                           std::uint64_t max_order = kDefaultMaxOrder) {
    BoundReport rep;
    rep.input = make_bound_input(ctx.q(), ctx.n(), d);
    rep.lwwz = bound_lwwz(rep.input.q, rep.input.n, d);
    rep.thm1 = bound_thm1(rep.input.q, rep.input.n, d);
    rep.thm2 = d == 1 ? bound_thm2(rep.input.q, rep.input.n)
                      : BoundValue{std::nullopt, "degree-one generator sets only"};
    rep.katz = katz_cohen_info(rep.input.q, rep.input.n);
    if (run_bfs) {
        GeneratorSet gens = build_generators(ctx, d);
        DiameterResult res = bfs_from_identity(gens, ctx, nullptr, StepConvention::kMultiply, max_order);
        if (res.connected && res.diameter.has_value()) {
            rep.exact_diameter = res.diameter;
            const double diam = static_cast<double>(*res.diameter);
            if (rep.lwwz.applicable()) rep.lwwz_violated = diam > *rep.lwwz.value;
            if (rep.thm1.applicable()) rep.thm1_violated = diam > *rep.thm1.value;
            if (rep.thm2.applicable()) rep.thm2_violated = diam > *rep.thm2.value;
        }
    }
    return rep;
}

}  // namespace polydiam
