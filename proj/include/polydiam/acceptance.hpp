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

// The exhaustive small-instance verification battery behind `selftest`.
//
// Nine independent criteria, each a pure function returning a result with
// its assertion count and first failure (if any).  Tolerances are pinned
// here, not configurable: these are the project's correctness gates.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "polydiam/bounds.hpp"
#include "polydiam/cayley.hpp"
#include "polydiam/charsum.hpp"
#include "polydiam/common.hpp"
#include "polydiam/dlog.hpp"
#include "polydiam/ff.hpp"
#include "polydiam/poly_enum.hpp"

namespace polydiam::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    std::string module_name;
    bool pass = true;
    std::uint64_t assertions = 0;
    std::string detail;  // summary when passing, first failure otherwise
    double seconds = 0.0;
};

struct BatteryReport {
    std::vector<CriterionResult> criteria;
    bool all_pass = true;
    std::uint64_t total_assertions = 0;
};

namespace detail {

class Checker {
public:
    void require(bool ok, const std::string& what) {
        ++assertions_;
        if (!ok) {
            ++failures_;
            if (first_failure_.empty()) first_failure_ = what;
        }
    }

    bool pass() const { return failures_ == 0; }
    std::uint64_t assertions() const { return assertions_; }
    const std::string& first_failure() const { return first_failure_; }

private:
    std::uint64_t assertions_ = 0;
    std::uint64_t failures_ = 0;
    std::string first_failure_;
};

inline std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_split(std::uint64_t m) {
    if (m < 2) return std::nullopt;
    std::uint64_t p = 0;
    std::uint64_t rest = m;
    for (std::uint64_t c = 2; c * c <= m; ++c) {
        if (m % c == 0) {
            p = c;
            break;
        }
    }
    if (p == 0) return std::make_pair(m, 1u);  // prime
    std::uint32_t s = 0;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, s);
}

// q^n <= limit without overflow
inline bool pow_le(std::uint64_t q, std::uint32_t n, std::uint64_t limit) {
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        acc *= q;
        if (acc > limit) return false;
    }
    return true;
}

// all prime powers q with q^n <= limit, ascending
inline std::vector<std::uint64_t> prime_powers_with_power_bound(std::uint32_t n, std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; pow_le(q, n, limit); ++q) {
        if (prime_power_split(q)) out.push_back(q);
    }
    return out;
}

// catalog cache keyed by (q, d): criteria revisit the same degree across
// many extension degrees
class CatalogCache {
public:
    const PolyCatalog& get(const BaseField& field, std::uint32_t d) {
        auto key = std::make_pair(field.params().q, d);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, make_catalog(field, d)).first;
        return it->second;
    }

private:
    std::map<std::pair<std::uint64_t, std::uint32_t>, PolyCatalog> cache_;
};

template <typename Fn>
CriterionResult timed(int id, const std::string& name, const std::string& module_name, Fn&& body) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    res.module_name = module_name;
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    std::string summary = body(check);
    const auto stop = std::chrono::steady_clock::now();
    res.seconds = std::chrono::duration<double>(stop - start).count();
    res.pass = check.pass();
    res.assertions = check.assertions();
    res.detail = res.pass ? summary : check.first_failure();
    return res;
}

}  // namespace detail

// 1. Enumerated irreducible counts equal the divisor-sum formula.
inline CriterionResult criterion_counting() {
    return detail::timed(1, "irreducible counting identity", "poly_enum", [](detail::Checker& check) {
        std::uint64_t cells = 0;
        for (std::uint64_t q : {2, 3, 4, 5, 7}) {
            BaseField field = BaseField::from_order(q);
            for (std::uint32_t d = 1; d <= 6; ++d) {
                if (!detail::pow_le(q, d, 1000000)) continue;
                const auto irr = enumerate_irreducibles(field, d);
                check.require(BigInt(irr.size()) == count_irreducibles(q, d),
                              "enumerated count mismatch at q=" + std::to_string(q) +
                                  " d=" + std::to_string(d));
                ++cells;
            }
        }
        return std::to_string(cells) + " cells, exact equality";
    });
}

// 2. Weights over degree-d prime powers sum to q^d.
inline CriterionResult criterion_weight_identity() {
    return detail::timed(2, "prime-power weight identity", "poly_enum", [](detail::Checker& check) {
        std::uint64_t cells = 0;
        for (std::uint64_t q : {2, 3, 4, 5, 7}) {
            BaseField field = BaseField::from_order(q);
            for (std::uint32_t d = 1; d <= 6; ++d) {
                if (!detail::pow_le(q, d, 1000000)) continue;
                BigInt sum = 0;
                for (const auto& wp : enumerate_prime_powers(field, d)) sum += wp.lambda;
                check.require(sum == boost::multiprecision::pow(BigInt(q), d),
                              "weight sum mismatch at q=" + std::to_string(q) + " d=" + std::to_string(d));
                ++cells;
            }
        }
        return std::to_string(cells) + " cells, exact equality";
    });
}

// 3. Single-source BFS agrees with the all-pairs oracle on every graph with
//    at most 512 vertices, for the first two moduli per cell and both step
//    conventions.
inline CriterionResult criterion_diameter_oracle() {
    return detail::timed(3, "diameter oracle agreement", "cayley", [](detail::Checker& check) {
        std::uint64_t graphs = 0;
        for (std::uint64_t q : detail::prime_powers_with_power_bound(2, 512)) {
            BaseField field = BaseField::from_order(q);
            for (std::uint32_t n = 2; detail::pow_le(q, n, 512); ++n) {
                auto irr = enumerate_irreducibles(field, n);
                const std::size_t variants = irr.size() >= 2 ? 2 : 1;
                for (std::size_t v = 0; v < variants; ++v) {
                    FieldContext ctx(field, n, irr[v]);
                    for (std::uint32_t d = 1; d < n; ++d) {
                        GeneratorSet gens = build_generators(ctx, d);
                        auto oracle = all_pairs_diameter_oracle(gens, ctx);
                        for (StepConvention conv :
                             {StepConvention::kMultiply, StepConvention::kMultiplyInverse}) {
                            DiameterResult bfs = bfs_from_identity(gens, ctx, nullptr, conv);
                            const std::string at = "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                                   " d=" + std::to_string(d) + " f=" +
                                                   irr[v].to_string() + " conv=" +
                                                   step_convention_name(conv);
                            check.require(bfs.connected == oracle.has_value(),
                                          "connectivity disagreement at " + at);
                            if (oracle.has_value() && bfs.connected) {
                                check.require(bfs.diameter.value() == *oracle,
                                              "diameter disagreement at " + at);
                            }
                        }
                        ++graphs;
                    }
                }
            }
        }
        return std::to_string(graphs) + " graphs, two conventions each";
    });
}

// 4. Wherever a bound's precondition holds and the group fits in 10^6, the
//    graph is connected and the exact diameter respects the bound.
inline CriterionResult criterion_bound_correctness() {
    return detail::timed(4, "diameter bound correctness", "bounds", [](detail::Checker& check) {
        detail::CatalogCache catalogs;
        std::uint64_t checked = 0;
        for (std::uint32_t n = 2; detail::pow_le(2, n, 1000001); ++n) {
            for (std::uint64_t q : detail::prime_powers_with_power_bound(n, 1000001)) {
                std::vector<std::uint32_t> ds;
                std::vector<BoundValue> lwwz(n), thm1(n), thm2(n);
                for (std::uint32_t d = 1; d < n; ++d) {
                    lwwz[d] = bound_lwwz(q, n, d);
                    thm1[d] = bound_thm1(q, n, d);
                    thm2[d] = d == 1 ? bound_thm2(q, n) : BoundValue{};
                    if (lwwz[d].applicable() || thm1[d].applicable() || thm2[d].applicable()) {
                        ds.push_back(d);
                    }
                }
                if (ds.empty()) continue;
                BaseField field = BaseField::from_order(q);
                FieldContext ctx(field, n);
                DlogTable dlog(ctx);
                for (std::uint32_t d : ds) {
                    GeneratorSet gens = build_generators(ctx, catalogs.get(field, d));
                    DiameterResult bfs = bfs_from_identity(gens, ctx, &dlog);
                    const std::string at =
                        "q=" + std::to_string(q) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
                    check.require(bfs.connected, "graph not connected at " + at);
                    if (!bfs.connected) continue;
                    const double diam = static_cast<double>(bfs.diameter.value());
                    if (lwwz[d].applicable()) {
                        check.require(diam <= *lwwz[d].value, "general bound violated at " + at);
                    }
                    if (thm1[d].applicable()) {
                        check.require(diam <= *thm1[d].value, "refined bound violated at " + at);
                    }
                    if (thm2[d].applicable()) {
                        check.require(diam <= *thm2[d].value, "degree-one bound violated at " + at);
                    }
                    ++checked;
                }
            }
        }
        // frozen anchor values
        check.require(std::fabs(*bound_lwwz(5, 5, 2).value - 37.062837195053899) < 1e-9,
                      "anchor value drifted: general bound at q=5 n=5 d=2");
        check.require(std::fabs(*bound_thm1(5, 5, 2).value - 37.437973593273059) < 1e-9,
                      "anchor value drifted: refined bound at q=5 n=5 d=2");
        check.require(std::fabs(*bound_thm2(11, 3).value - 9.2011879266363828) < 1e-9,
                      "anchor value drifted: degree-one bound at q=11 n=3");
        return std::to_string(checked) + " (cell, degree) pairs, zero violations";
    });
}

// 5. Weighted character sums stay within (n-1) q^{d/2} for all cells with
//    at most 10^5 elements.
inline CriterionResult criterion_weil() {
    return detail::timed(5, "character sum magnitude bound", "charsum", [](detail::Checker& check) {
        detail::CatalogCache catalogs;
        std::uint64_t cells = 0;
        for (std::uint32_t n = 2; detail::pow_le(2, n, 100000); ++n) {
            for (std::uint64_t q : detail::prime_powers_with_power_bound(n, 100000)) {
                BaseField field = BaseField::from_order(q);
                FieldContext ctx(field, n);
                DlogTable dlog(ctx);
                CharTable chars(dlog);
                for (std::uint32_t d = 1; d < n; ++d) {
                    WeilReport rep = verify_weil(ctx, catalogs.get(field, d), chars);
                    check.require(rep.pass, "magnitude bound violated at q=" + std::to_string(q) +
                                                " n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                                " ratio=" + std::to_string(rep.ratio));
                    ++cells;
                }
            }
        }
        return std::to_string(cells) + " cells, zero violations";
    });
}

// 6. The 2m-th moment identity holds in float and exact arithmetic for all
//    cells with at most 10^4 elements and a tractable collision count.
inline CriterionResult criterion_moment() {
    return detail::timed(6, "moment identity", "charsum", [](detail::Checker& check) {
        detail::CatalogCache catalogs;
        std::uint64_t cells = 0;
        const BigInt collision_budget = 100000000;  // (#irreducibles)^{2m} cap
        for (std::uint32_t n = 2; detail::pow_le(2, n, 10000); ++n) {
            for (std::uint64_t q : detail::prime_powers_with_power_bound(n, 10000)) {
                BaseField field = BaseField::from_order(q);
                FieldContext ctx(field, n);
                DlogTable dlog(ctx);
                CharTable chars(dlog);
                for (std::uint32_t d = 1; d < n; ++d) {
                    const std::uint32_t m = moment_exponent(n, d);
                    const BigInt icount = count_irreducibles(q, d);
                    if (boost::multiprecision::pow(icount, 2 * m) > collision_budget) continue;
                    MomentReport rep = verify_moment(ctx, catalogs.get(field, d), chars);
                    const std::string at =
                        "q=" + std::to_string(q) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
                    check.require(rep.float_pass,
                                  "float moment identity failed at " + at +
                                      " rel=" + std::to_string(rep.rel_error));
                    check.require(rep.exact_pass, "exact collision routes disagree at " + at);
                    check.require(rep.upper_pass, "collision upper bracket failed at " + at);
                    ++cells;
                }
            }
        }
        return std::to_string(cells) + " cells, three routes each";
    });
}

// 7. Representation counters are everywhere positive at the rounded-up
//    bound values, and their totals match the closed-form masses exactly.
inline CriterionResult criterion_rep_counters() {
    return detail::timed(7, "representation counters", "charsum", [](detail::Checker& check) {
        // mixed-weight counter at q=5, n=5, d=2
        {
            const std::uint32_t k = static_cast<std::uint32_t>(std::ceil(*bound_thm1(5, 5, 2).value));
            check.require(k == 38, "rounded refined bound drifted at q=5 n=5 d=2");
            BaseField field = BaseField::from_order(5);
            FieldContext ctx(field, 5);
            DlogTable dlog(ctx);
            PolyCatalog catalog = make_catalog(field, 2);
            RepCountVector rep = rep_count_Mk(ctx, catalog, dlog, k);
            check.require(rep.all_positive, "mixed counter has a zero at q=5 n=5 d=2 k=38");
            const BigInt mass = boost::multiprecision::pow(BigInt(5), 2 * (k - 2 * rep.m)) *
                                boost::multiprecision::pow(BigInt(catalog.irreducibles.size()), 2 * rep.m);
            check.require(rep.total == mass, "mixed counter mass mismatch at q=5 n=5 d=2 k=38");
            check.require(rep.deviation_ok, "mixed counter deviation bound failed at q=5 n=5 d=2 k=38");
            GeneratorSet gens = build_generators(ctx, catalog);
            DiameterResult bfs = bfs_from_identity(gens, ctx, &dlog);
            check.require(bfs.connected && bfs.diameter.value() <= k,
                          "positivity inconsistent with BFS diameter at q=5 n=5 d=2");
        }
        // unweighted degree-one counter at q=11, n=3
        {
            const std::uint32_t k = static_cast<std::uint32_t>(std::ceil(*bound_thm2(11, 3).value));
            check.require(k == 10, "rounded degree-one bound drifted at q=11 n=3");
            BaseField field = BaseField::from_order(11);
            FieldContext ctx(field, 3);
            DlogTable dlog(ctx);
            RepCountVector rep = rep_count_Nk(ctx, dlog, k);
            check.require(rep.all_positive, "linear counter has a zero at q=11 n=3 k=10");
            check.require(rep.total == boost::multiprecision::pow(BigInt(11), k),
                          "linear counter mass mismatch at q=11 n=3 k=10");
            check.require(rep.deviation_ok, "linear counter deviation bound failed at q=11 n=3 k=10");
            GeneratorSet gens = build_generators(ctx, 1);
            DiameterResult bfs = bfs_from_identity(gens, ctx, &dlog);
            check.require(bfs.connected && bfs.diameter.value() <= k,
                          "positivity inconsistent with BFS diameter at q=11 n=3");
        }
        return "both anchor instances positive with exact masses";
    });
}

// 8. Character orthogonality and multiplicativity, exhaustively on every
//    group with at most 512 elements.
inline CriterionResult criterion_characters() {
    return detail::timed(8, "character orthogonality and multiplicativity", "charsum",
                         [](detail::Checker& check) {
                             std::uint64_t groups = 0;
                             for (std::uint64_t q : detail::prime_powers_with_power_bound(1, 512)) {
                                 BaseField field = BaseField::from_order(q);
                                 for (std::uint32_t n = 1; detail::pow_le(q, n, 512); ++n) {
                                     if (checked_pow_u64(q, n) < 3) continue;
                                     FieldContext ctx(field, n);
                                     DlogTable dlog(ctx);
                                     CharTable chars(dlog);
                                     const std::string at =
                                         "q=" + std::to_string(q) + " n=" + std::to_string(n);
                                     OrthogonalityReport orth = verify_orthogonality(chars);
                                     check.require(orth.float_pass, "orthogonality sums off at " + at);
                                     check.require(orth.exact_pass,
                                                   "orthogonality hit counts off at " + at);
                                     MultiplicativityReport mult = verify_multiplicativity(chars);
                                     check.require(mult.pass, "multiplicativity failed at " + at);
                                     ++groups;
                                 }
                             }
                             return std::to_string(groups) + " groups, exhaustive";
                         });
}

// 9. The improved asymptotic constant beats the older one across (0, 1/2).
inline CriterionResult criterion_asymptotics() {
    return detail::timed(9, "asymptotic constants", "bounds", [](detail::Checker& check) {
        for (int i = 1; i <= 100; ++i) {
            const double theta = i / 201.0;  // interior grid of (0, 1/2)
            AsymptoticConstants c = asymptotic_constants(theta);
            check.require(c.improved < c.old,
                          "improved constant not smaller at theta=" + std::to_string(theta));
        }
        AsymptoticConstants quarter = asymptotic_constants(0.25);
        check.require(std::fabs(quarter.improved - 3.0) < 1e-12 && std::fabs(quarter.old - 4.0) < 1e-12,
                      "anchor constants at theta=1/4 drifted");
        return "100-point grid plus anchor";
    });
}

inline BatteryReport run_battery(std::ostream* log = nullptr) {
    BatteryReport report;
    const auto run = [&](CriterionResult (*fn)()) {
        CriterionResult res = fn();
        if (log) {
            (*log) << "criterion " << res.id << " (" << res.name << "): "
                   << (res.pass ? "PASS" : "FAIL") << " [" << res.assertions << " assertions, "
                   << res.seconds << " s] " << res.detail << "\n";
            log->flush();
        }
        report.all_pass = report.all_pass && res.pass;
        report.total_assertions += res.assertions;
        report.criteria.push_back(std::move(res));
    };
    run(&criterion_counting);
    run(&criterion_weight_identity);
    run(&criterion_diameter_oracle);
    run(&criterion_bound_correctness);
    run(&criterion_weil);
    run(&criterion_moment);
    run(&criterion_rep_counters);
    run(&criterion_characters);
    run(&criterion_asymptotics);
    return report;
}

inline std::map<std::string, std::uint64_t> assertions_by_module(const BatteryReport& report) {
    std::map<std::string, std::uint64_t> out;
    for (const auto& c : report.criteria) out[c.module_name] += c.assertions;
    return out;
}

}  // namespace polydiam::acceptance
