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

// Parameter-sweep orchestration and the flat report row shared by the
// sweep and the single-cell subcommands.
//
// Reproducibility contract: a row is a pure function of (q, n, d, modulus,
// options).  The same cell pipeline backs both `sweep` and `bounds`, so a
// sweep row can be re-derived verbatim by the single-cell command.  Cells
// that exceed a resource cap are reported with status "skipped" instead of
// aborting the sweep; the reason is collected in CellResult::notes.
// runtime_ms stays "NA" unless timings are requested, keeping default
// output byte-identical across runs.

#pragma once

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "polydiam/bounds.hpp"
#include "polydiam/cayley.hpp"
#include "polydiam/charsum.hpp"
#include "polydiam/common.hpp"
#include "polydiam/dlog.hpp"
#include "polydiam/ff.hpp"
#include "polydiam/poly_enum.hpp"

namespace polydiam {

struct CellSpec {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::optional<std::string> modulus_text;  // default: canonically first irreducible
};

struct CellOptions {
    bool with_bfs = true;
    bool with_charsums = false;
    bool exact_moment = false;  // moment_pass from the exact routes instead of the float route
    bool timings = false;
    std::uint64_t max_order = kDefaultMaxOrder;
    std::uint64_t enum_cap = kDefaultEnumCap;
    std::uint64_t factor_cap = kDefaultFactorCap;
    std::uint64_t char_cap = kDefaultCharCap;
};

// Flat record with a fixed, documented column set.  Absent values are "NA"
// in CSV and null in JSON.
struct ReportRow {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::string f;
    std::optional<bool> connected;
    std::optional<std::uint32_t> diameter;
    std::optional<std::uint64_t> distinct_generators;
    std::optional<std::uint64_t> regularity;
    std::optional<double> bound_lwwz;
    std::optional<double> bound_thm1;
    std::optional<double> bound_thm2;
    std::optional<double> max_weil_ratio;
    std::optional<bool> moment_pass;
    double theta = 0.0;
    std::optional<double> runtime_ms;
    std::string status;  // "ok", or "skipped" when a resource cap was hit
};

struct CellResult {
    ReportRow row;
    bool violation = false;          // a proved inequality failed on this cell
    std::vector<std::string> notes;  // cap messages and violation details
};

inline CellResult run_cell(const CellSpec& spec, const CellOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    CellResult res;
    ReportRow& row = res.row;
    row.q = spec.q;
    row.n = spec.n;
    row.d = spec.d;
    row.status = "ok";

    BaseField base = BaseField::from_order(spec.q);
    FieldContext ctx = spec.modulus_text
                           ? FieldContext(base, spec.n, FqPoly::from_string(*spec.modulus_text, spec.q))
                           : FieldContext(base, spec.n);
    row.f = ctx.modulus().to_string();
    row.theta = theta_of(spec.q, spec.n, spec.d);

    BoundValue lwwz = bound_lwwz(spec.q, spec.n, spec.d);
    BoundValue thm1 = bound_thm1(spec.q, spec.n, spec.d);
    BoundValue thm2 = spec.d == 1 ? bound_thm2(spec.q, spec.n) : BoundValue{};
    row.bound_lwwz = lwwz.value;
    row.bound_thm1 = thm1.value;
    row.bound_thm2 = thm2.value;

    if (opt.with_bfs || opt.with_charsums) {
        try {
            PolyCatalog catalog = make_catalog(base, spec.d, opt.enum_cap);
            GeneratorSet gens = build_generators(ctx, catalog);
            row.distinct_generators = gens.distinct_count;
            row.regularity = gens.regularity;
            DlogTable dlog(ctx, opt.max_order, opt.factor_cap);

            if (opt.with_bfs) {
                DiameterResult bfs =
                    bfs_from_identity(gens, ctx, &dlog, StepConvention::kMultiply, opt.max_order);
                row.connected = bfs.connected;
                if (bfs.connected && bfs.diameter.has_value()) {
                    row.diameter = bfs.diameter;
                    const double diam = static_cast<double>(*bfs.diameter);
                    for (const auto& [name, bv] :
                         {std::pair<const char*, const BoundValue*>{"lwwz", &lwwz},
                          {"thm1", &thm1},
                          {"thm2", &thm2}}) {
                        if (bv->applicable() && diam > *bv->value) {
                            res.violation = true;
                            res.notes.push_back(std::string("bound violation (") + name + ") at q=" +
                                                std::to_string(spec.q) + " n=" + std::to_string(spec.n) +
                                                " d=" + std::to_string(spec.d));
                        }
                    }
                } else {
                    // Outside every bound's precondition the generators may
                    // generate a proper subgroup (e.g. q=5, n=5, d=1, where
                    // all five evaluations are squares); that is data.  Under
                    // an applicable bound, connectivity is part of the claim.
                    if (lwwz.applicable() || thm1.applicable() || thm2.applicable()) {
                        res.violation = true;
                        res.notes.push_back("disconnected graph under an applicable bound at q=" +
                                            std::to_string(spec.q) + " n=" + std::to_string(spec.n) +
                                            " d=" + std::to_string(spec.d));
                    }
                }
            }

            if (opt.with_charsums) {
                CharTable chars(dlog);
                WeilReport weil = verify_weil(ctx, catalog, chars, opt.char_cap);
                row.max_weil_ratio = weil.ratio;
                if (!weil.pass) {
                    res.violation = true;
                    res.notes.push_back("character sum bound violated at q=" + std::to_string(spec.q) +
                                        " n=" + std::to_string(spec.n) + " d=" + std::to_string(spec.d));
                }
                MomentReport moment = verify_moment(ctx, catalog, chars, opt.char_cap);
                row.moment_pass = opt.exact_moment ? (moment.exact_pass && moment.upper_pass)
                                                   : moment.float_pass;
                if (!*row.moment_pass) {
                    res.violation = true;
                    res.notes.push_back("moment identity violated at q=" + std::to_string(spec.q) +
                                        " n=" + std::to_string(spec.n) + " d=" + std::to_string(spec.d));
                }
            }
        } catch (const resource_error& e) {
            row.status = "skipped";
            res.notes.push_back(std::string(e.what()) + " [cell q=" + std::to_string(spec.q) +
                                " n=" + std::to_string(spec.n) + " d=" + std::to_string(spec.d) + "]");
        }
    }

    if (opt.timings) {
        const auto stop = std::chrono::steady_clock::now();
        row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return res;
}

// Cell grid in deterministic order: q as listed, then n ascending, then d
// ascending; only feasible cells (d < n) are emitted.
inline std::vector<CellSpec> make_cells(const std::vector<std::uint64_t>& q_list, std::uint32_t n_lo,
                                        std::uint32_t n_hi, std::uint32_t d_lo, std::uint32_t d_hi) {
    if (n_lo > n_hi || d_lo > d_hi || n_lo == 0 || d_lo == 0) {
        throw precondition_error("make_cells: ranges must be non-empty and start at 1 or above");
    }
    std::vector<CellSpec> cells;
    for (std::uint64_t q : q_list) {
        for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
            for (std::uint32_t d = d_lo; d <= d_hi && d < n; ++d) {
                cells.push_back(CellSpec{q, n, d, std::nullopt});
            }
        }
    }
    return cells;
}

// Runs cells on `jobs` workers; results land in input order regardless of
// completion order.
inline std::vector<CellResult> run_sweep(const std::vector<CellSpec>& cells, const CellOptions& opt,
                                         unsigned jobs = 0) {
    if (jobs == 0) {
        jobs = std::thread::hardware_concurrency();
        if (jobs == 0) jobs = 1;
    }
    std::vector<CellResult> results(cells.size());
    if (jobs == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run_cell(cells[i], opt);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(cells.size());
    std::vector<std::thread> pool;
    const unsigned width = std::min<std::size_t>(jobs, cells.size());
    for (unsigned w = 0; w < width; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                try {
                    results[i] = run_cell(cells[i], opt);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);  // first failing cell in input order
    }
    return results;
}

// --- serialization -------------------------------------------------------

namespace detail {

// Shortest round-trip decimal form; locale-independent.
inline std::string double_to_string(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw internal_error("double_to_string: conversion failed");
    return std::string(buf, ptr);
}

template <typename T>
std::string opt_csv(const std::optional<T>& v) {
    if (!v.has_value()) return "NA";
    if constexpr (std::is_same_v<T, bool>) {
        return *v ? "true" : "false";
    } else if constexpr (std::is_floating_point_v<T>) {
        return double_to_string(*v);
    } else {
        return std::to_string(*v);
    }
}

}  // namespace detail

inline std::string report_row_csv_header() {
    return "q,n,d,f,connected,diameter,distinct_generators,regularity,bound_lwwz,bound_thm1,"
           "bound_thm2,max_weil_ratio,moment_pass,theta,runtime_ms,status";
}

inline std::string report_row_to_csv(const ReportRow& r) {
    std::string line;
    line += std::to_string(r.q);
    line += ',';
    line += std::to_string(r.n);
    line += ',';
    line += std::to_string(r.d);
    line += ",\"" + r.f + "\",";  // coefficient strings contain commas, so always quoted
    line += detail::opt_csv(r.connected) + ',';
    line += detail::opt_csv(r.diameter) + ',';
    line += detail::opt_csv(r.distinct_generators) + ',';
    line += detail::opt_csv(r.regularity) + ',';
    line += detail::opt_csv(r.bound_lwwz) + ',';
    line += detail::opt_csv(r.bound_thm1) + ',';
    line += detail::opt_csv(r.bound_thm2) + ',';
    line += detail::opt_csv(r.max_weil_ratio) + ',';
    line += detail::opt_csv(r.moment_pass) + ',';
    line += detail::double_to_string(r.theta) + ',';
    line += detail::opt_csv(r.runtime_ms) + ',';
    line += r.status;
    return line;
}

inline nlohmann::ordered_json report_row_to_json(const ReportRow& r) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["d"] = r.d;
    j["f"] = r.f;
    auto set = [&j](const char* key, const auto& opt) {
        if (opt.has_value()) {
            j[key] = *opt;
        } else {
            j[key] = nullptr;
        }
    };
    set("connected", r.connected);
    set("diameter", r.diameter);
    set("distinct_generators", r.distinct_generators);
    set("regularity", r.regularity);
    set("bound_lwwz", r.bound_lwwz);
    set("bound_thm1", r.bound_thm1);
    set("bound_thm2", r.bound_thm2);
    set("max_weil_ratio", r.max_weil_ratio);
    set("moment_pass", r.moment_pass);
    j["theta"] = r.theta;
    set("runtime_ms", r.runtime_ms);
    j["status"] = r.status;
    return j;
}

inline std::string rows_to_csv(const std::vector<CellResult>& results) {
    std::string out = report_row_csv_header() + "\n";
    for (const auto& res : results) out += report_row_to_csv(res.row) + "\n";
    return out;
}

inline std::string rows_to_json(const std::vector<CellResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& res : results) arr.push_back(report_row_to_json(res.row));
    return arr.dump(2) + "\n";
}

}  // namespace polydiam
