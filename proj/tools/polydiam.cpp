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

// Command-line front-end.
//
// Exit codes: 0 success, 1 violated invariant or runtime failure,
// 2 usage error.  Outputs are deterministic for a fixed build and flags
// (timings are opt-in precisely because they break byte-identity).
// Caps default from environment variables (POLYDIAM_MAX_ORDER,
// POLYDIAM_ENUM_CAP, POLYDIAM_FACTOR_CAP, POLYDIAM_CHAR_CAP,
// POLYDIAM_REPCOUNT_CAP); flags override the environment.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polydiam/acceptance.hpp"
#include "polydiam/sweep.hpp"

namespace {

using namespace polydiam;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0' || parsed == 0) {
        throw precondition_error(std::string(name) + " must be a positive integer");
    }
    return parsed;
}

struct Caps {
    std::uint64_t max_order = env_u64("POLYDIAM_MAX_ORDER", kDefaultMaxOrder);
    std::uint64_t enum_cap = env_u64("POLYDIAM_ENUM_CAP", kDefaultEnumCap);
    std::uint64_t factor_cap = env_u64("POLYDIAM_FACTOR_CAP", kDefaultFactorCap);
    std::uint64_t char_cap = env_u64("POLYDIAM_CHAR_CAP", kDefaultCharCap);
    std::uint64_t rep_cap = env_u64("POLYDIAM_REPCOUNT_CAP", kDefaultRepCountCap);
};

std::string fmt(double v) { return detail::double_to_string(v); }

std::string fmt_bool(bool v) { return v ? "true" : "false"; }

FieldContext make_context(std::uint64_t q, std::uint32_t n, const std::string& modulus_text,
                          std::uint64_t enum_cap) {
    BaseField base = BaseField::from_order(q);
    if (!modulus_text.empty()) return FieldContext(base, n, FqPoly::from_string(modulus_text, q));
    return FieldContext(base, n, first_irreducible(base, n, enum_cap));
}

// --- enumerate -------------------------------------------------------------

int cmd_enumerate(std::uint64_t q, std::uint32_t d, bool prime_powers, bool count_only,
                  const std::string& format, const Caps& caps) {
    BaseField field = BaseField::from_order(q);
    if (prime_powers) {
        auto list = enumerate_prime_powers(field, d, caps.enum_cap);
        BigInt lambda_sum = 0;
        for (const auto& wp : list) lambda_sum += wp.lambda;
        const BigInt mass = boost::multiprecision::pow(BigInt(q), d);
        if (count_only) {
            std::cout << "count=" << list.size() << " lambda_sum=" << lambda_sum << " expected_mass=" << mass
                      << "\n";
        } else if (format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& wp : list) {
                nlohmann::ordered_json row;
                row["g"] = wp.poly.to_string();
                row["base"] = wp.base.to_string();
                row["k"] = wp.k;
                row["lambda"] = wp.lambda;
                arr.push_back(row);
            }
            std::cout << arr.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "g,base,k,lambda\n";
            for (const auto& wp : list) {
                std::cout << '"' << wp.poly.to_string() << "\",\"" << wp.base.to_string() << "\"," << wp.k
                          << ',' << wp.lambda << "\n";
            }
        } else {
            for (const auto& wp : list) {
                std::cout << wp.poly.to_string() << ";" << wp.base.to_string() << ";" << wp.k << ";"
                          << wp.lambda << "\n";
            }
        }
        if (lambda_sum != mass) {
            std::cerr << "weight identity violated: lambda_sum=" << lambda_sum << " expected " << mass
                      << "\n";
            return 1;
        }
        return 0;
    }

    auto list = enumerate_irreducibles(field, d, caps.enum_cap);
    const BigInt expected = count_irreducibles(q, d);
    if (count_only) {
        std::cout << "count=" << list.size() << " expected=" << expected << "\n";
    } else if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& g : list) arr.push_back(g.to_string());
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "g\n";
        for (const auto& g : list) std::cout << '"' << g.to_string() << "\"\n";
    } else {
        for (const auto& g : list) std::cout << g.to_string() << "\n";
    }
    if (BigInt(list.size()) != expected) {
        std::cerr << "counting identity violated: enumerated " << list.size() << " expected " << expected
                  << "\n";
        return 1;
    }
    return 0;
}

// --- diameter ----------------------------------------------------------------

int cmd_diameter(std::uint64_t q, std::uint32_t n, std::uint32_t d, const std::string& modulus_text,
                 const std::string& convention_name, bool oracle, bool histogram, const Caps& caps) {
    FieldContext ctx = make_context(q, n, modulus_text, caps.enum_cap);
    GeneratorSet gens = build_generators(ctx, d, caps.enum_cap);
    DlogTable dlog(ctx, caps.max_order, caps.factor_cap);
    const StepConvention conv = convention_name == "multiply-inverse" ? StepConvention::kMultiplyInverse
                                                                      : StepConvention::kMultiply;
    DiameterResult res = bfs_from_identity(gens, ctx, &dlog, conv, caps.max_order);

    std::cout << "q=" << q << "\nn=" << n << "\nd=" << d << "\nf=" << ctx.modulus().to_string()
              << "\nconvention=" << step_convention_name(conv)
              << "\ndistinct_generators=" << gens.distinct_count << "\nregularity=" << gens.regularity
              << "\nconnected=" << fmt_bool(res.connected) << "\nreached=" << res.reached << "\n";
    if (res.diameter.has_value()) {
        std::cout << "diameter=" << *res.diameter << "\n";
    } else {
        std::cout << "diameter=NA\n";
    }
    if (res.unreached_witness.has_value()) {
        std::cout << "unreached_witness_code=" << ctx.code(*res.unreached_witness) << "\n";
    }
    if (histogram) {
        std::cout << "histogram=";
        for (std::size_t i = 0; i < res.distance_histogram.size(); ++i) {
            if (i > 0) std::cout << ',';
            std::cout << i << ':' << res.distance_histogram[i];
        }
        std::cout << "\n";
    }
    if (oracle) {
        auto exact = all_pairs_diameter_oracle(gens, ctx);
        std::cout << "oracle_diameter=" << (exact ? std::to_string(*exact) : std::string("NA")) << "\n";
        const bool agree = exact.has_value() == (res.connected && res.diameter.has_value()) &&
                           (!exact.has_value() || *exact == *res.diameter);
        std::cout << "oracle_agreement=" << fmt_bool(agree) << "\n";
        if (!agree) {
            std::cerr << "oracle disagreement detected\n";
            return 1;
        }
    }
    return 0;
}

// --- bounds (single cell, same pipeline as sweep) ---------------------------

int cmd_bounds(std::uint64_t q, std::uint32_t n, std::uint32_t d, const std::string& modulus_text,
               bool with_bfs, bool with_charsums, bool exact, bool timings, const std::string& format,
               const Caps& caps) {
    CellSpec spec{q, n, d, modulus_text.empty() ? std::nullopt : std::make_optional(modulus_text)};
    CellOptions opt;
    opt.with_bfs = with_bfs;
    opt.with_charsums = with_charsums;
    opt.exact_moment = exact;
    opt.timings = timings;
    opt.max_order = caps.max_order;
    opt.enum_cap = caps.enum_cap;
    opt.factor_cap = caps.factor_cap;
    opt.char_cap = caps.char_cap;
    CellResult res = run_cell(spec, opt);
    std::vector<CellResult> one{res};
    if (format == "json") {
        std::cout << rows_to_json(one);
    } else {
        std::cout << rows_to_csv(one);
    }
    for (const auto& note : res.notes) std::cerr << note << "\n";
    if (res.row.status != "ok") return 1;
    return res.violation ? 1 : 0;
}

// --- charsums ---------------------------------------------------------------

int cmd_charsums(std::uint64_t q, std::uint32_t n, std::uint32_t d, const std::string& modulus_text,
                 bool list, const Caps& caps) {
    FieldContext ctx = make_context(q, n, modulus_text, caps.enum_cap);
    DlogTable dlog(ctx, caps.max_order, caps.factor_cap);
    CharTable chars(dlog);
    PolyCatalog catalog = make_catalog(ctx.base(), d, caps.enum_cap);

    WeilReport weil = verify_weil(ctx, catalog, chars, caps.char_cap);
    MomentReport moment = verify_moment(ctx, catalog, chars, caps.char_cap);

    std::cout << "q=" << q << "\nn=" << n << "\nd=" << d << "\nf=" << ctx.modulus().to_string()
              << "\ngroup_order=" << dlog.order() << "\nweil_max_abs=" << fmt(weil.max_abs_S)
              << "\nweil_argmax_j=" << weil.argmax_j << "\nweil_bound=" << fmt(weil.bound)
              << "\nweil_ratio=" << fmt(weil.ratio) << "\nweil_pass=" << fmt_bool(weil.pass)
              << "\nmoment_m=" << moment.m << "\nmoment_irreducibles=" << moment.icount
              << "\nmoment_lhs=" << fmt(moment.lhs) << "\nmoment_collisions=" << moment.collision_count
              << "\nmoment_rel_error=" << fmt(moment.rel_error)
              << "\nmoment_float_pass=" << fmt_bool(moment.float_pass)
              << "\nmoment_exact_pass=" << fmt_bool(moment.exact_pass)
              << "\nmoment_upper_pass=" << fmt_bool(moment.upper_pass) << "\n";

    if (list) {
        auto weighted = weighted_support(ctx, catalog, dlog);
        auto plain = irreducible_support(ctx, catalog, dlog);
        auto S = char_sums_over_support(chars, weighted);
        auto T = char_sums_over_support(chars, plain);
        std::cout << "j,S_re,S_im,abs_S,T_re,T_im,abs_T\n";
        for (std::uint64_t j = 0; j < chars.order(); ++j) {
            std::cout << j << ',' << fmt(S[j].real()) << ',' << fmt(S[j].imag()) << ','
                      << fmt(std::abs(S[j])) << ',' << fmt(T[j].real()) << ',' << fmt(T[j].imag()) << ','
                      << fmt(std::abs(T[j])) << "\n";
        }
    }
    return (weil.pass && moment.pass) ? 0 : 1;
}

// --- repcount ---------------------------------------------------------------

int cmd_repcount(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint32_t k, bool linear,
                 const std::string& modulus_text, bool dump, const Caps& caps) {
    FieldContext ctx = make_context(q, n, modulus_text, caps.enum_cap);
    DlogTable dlog(ctx, caps.max_order, caps.factor_cap);
    RepCountVector rep;
    if (linear) {
        rep = rep_count_Nk(ctx, dlog, k, caps.rep_cap);
    } else {
        PolyCatalog catalog = make_catalog(ctx.base(), d, caps.enum_cap);
        rep = rep_count_Mk(ctx, catalog, dlog, k, caps.rep_cap);
    }
    std::cout << "q=" << q << "\nn=" << n << "\nd=" << (linear ? 1 : d) << "\nk=" << rep.k
              << "\nm=" << rep.m << "\nkind=" << (linear ? "linear" : "mixed") << "\ntotal=" << rep.total
              << "\nmin_count=" << rep.min_count << "\nmax_count=" << rep.max_count
              << "\nmean=" << fmt(static_cast<double>(rep.mean))
              << "\nmax_abs_deviation=" << fmt(static_cast<double>(rep.max_abs_deviation))
              << "\ndeviation_bound=" << fmt(static_cast<double>(rep.deviation_bound))
              << "\nall_positive=" << fmt_bool(rep.all_positive)
              << "\ndeviation_ok=" << fmt_bool(rep.deviation_ok) << "\n";
    if (dump) {
        for (std::size_t t = 0; t < rep.counts.size(); ++t) {
            std::cout << t << ':' << rep.counts[t] << "\n";
        }
    }
    return rep.deviation_ok ? 0 : 1;
}

// --- sweep --------------------------------------------------------------------

bool parse_range(const std::string& text, std::uint32_t& lo, std::uint32_t& hi) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = static_cast<std::uint32_t>(std::stoul(text));
        } else {
            lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, pos)));
            hi = static_cast<std::uint32_t>(std::stoul(text.substr(pos + 2)));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

int cmd_sweep(const std::vector<std::uint64_t>& q_list, const std::string& n_range,
              const std::string& d_range, bool with_charsums, bool exact, bool timings, unsigned jobs,
              const std::string& out_path, const std::string& format, const Caps& caps) {
    std::uint32_t n_lo = 0, n_hi = 0, d_lo = 0, d_hi = 0;
    if (!parse_range(n_range, n_lo, n_hi) || !parse_range(d_range, d_lo, d_hi)) {
        std::cerr << "invalid range; expected A..B with 1 <= A <= B\n";
        return 2;
    }
    for (std::uint64_t q : q_list) {
        try {
            BaseField::from_order(q);
        } catch (const precondition_error&) {
            std::cerr << "q=" << q << " is not a prime power\n";
            return 2;
        }
    }
    CellOptions opt;
    opt.with_bfs = true;
    opt.with_charsums = with_charsums;
    opt.exact_moment = exact;
    opt.timings = timings;
    opt.max_order = caps.max_order;
    opt.enum_cap = caps.enum_cap;
    opt.factor_cap = caps.factor_cap;
    opt.char_cap = caps.char_cap;

    auto cells = make_cells(q_list, n_lo, n_hi, d_lo, d_hi);
    auto results = run_sweep(cells, opt, jobs);

    bool violation = false;
    for (const auto& res : results) {
        violation = violation || res.violation;
        for (const auto& note : res.notes) std::cerr << note << "\n";
    }
    const std::string payload = format == "json" ? rows_to_json(results) : rows_to_csv(results);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 1;
        }
        out << payload;
    }
    return violation ? 1 : 0;
}

// --- selftest ---------------------------------------------------------------

int cmd_selftest(int only) {
    using namespace polydiam::acceptance;
    if (only != 0) {
        CriterionResult (*table[])() = {
            &criterion_counting,    &criterion_weight_identity, &criterion_diameter_oracle,
            &criterion_bound_correctness, &criterion_weil,      &criterion_moment,
            &criterion_rep_counters, &criterion_characters,     &criterion_asymptotics};
        if (only < 1 || only > 9) {
            std::cerr << "--only takes a criterion number between 1 and 9\n";
            return 2;
        }
        CriterionResult res = table[only - 1]();
        std::cout << "criterion " << res.id << " (" << res.name << "): " << (res.pass ? "PASS" : "FAIL")
                  << " [" << res.assertions << " assertions, " << res.seconds << " s] " << res.detail
                  << "\n";
        return res.pass ? 0 : 1;
    }
    BatteryReport report = run_battery(&std::cout);
    std::cout << "assertions by module:\n";
    for (const auto& [module_name, count] : assertions_by_module(report)) {
        std::cout << "  " << module_name << ": " << count << "\n";
    }
    std::cout << "total assertions: " << report.total_assertions << "\n";
    if (!report.all_pass) {
        for (const auto& c : report.criteria) {
            if (!c.pass) {
                std::cout << "FAILED: criterion " << c.id << " (" << c.name << "): " << c.detail << "\n";
                break;
            }
        }
        return 1;
    }
    std::cout << "ALL PASS\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graph diameters for finite field extensions: enumeration, BFS, "
                 "character sums, and closed-form bounds"};
    app.require_subcommand(1);

    Caps caps;

    // shared cell parameters
    std::uint64_t q = 0;
    std::uint32_t n = 0, d = 0, k = 0;
    std::string modulus_text, format = "plain", convention = "multiply";

    auto add_cap_flags = [&caps](CLI::App* cmd) {
        cmd->add_option("--max-order", caps.max_order, "largest group order to materialize")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--enum-cap", caps.enum_cap, "largest polynomial enumeration")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--factor-cap", caps.factor_cap, "trial division limit")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--char-cap", caps.char_cap, "largest character-sum group")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--repcount-cap", caps.rep_cap, "largest representation-count group")
            ->check(CLI::PositiveNumber);
    };

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list monic irreducibles or prime powers of degree d");
    bool prime_powers = false, count_only = false;
    enum_cmd->add_option("--q", q, "field size (prime power)")->required()->check(CLI::PositiveNumber);
    enum_cmd->add_option("--d", d, "degree")->required()->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--prime-powers", prime_powers, "list prime powers h^k with weights");
    enum_cmd->add_flag("--count-only", count_only, "print only the count and the predicted count");
    enum_cmd->add_option("--format", format, "plain|csv|json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    add_cap_flags(enum_cmd);

    // diameter
    auto* diam_cmd = app.add_subcommand("diameter", "breadth-first diameter of the generator graph");
    bool oracle = false, histogram = false;
    diam_cmd->add_option("--q", q, "field size (prime power)")->required()->check(CLI::PositiveNumber);
    diam_cmd->add_option("--n", n, "extension degree")->required()->check(CLI::PositiveNumber);
    diam_cmd->add_option("--d", d, "generator degree")->required()->check(CLI::PositiveNumber);
    diam_cmd->add_option("--modulus", modulus_text, "comma-separated coefficients, constant first");
    diam_cmd->add_option("--convention", convention, "edge step: multiply|multiply-inverse")
        ->check(CLI::IsMember({"multiply", "multiply-inverse"}));
    diam_cmd->add_flag("--oracle", oracle, "cross-check against the all-pairs oracle (order <= 512)");
    diam_cmd->add_flag("--histogram", histogram, "print the distance histogram");
    add_cap_flags(diam_cmd);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds for one cell, optionally with BFS");
    bool with_bfs = false, with_charsums = false, exact = false, timings = false;
    bounds_cmd->add_option("--q", q, "field size (prime power)")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--n", n, "extension degree")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--d", d, "generator degree")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--modulus", modulus_text, "comma-separated coefficients, constant first");
    bounds_cmd->add_flag("--with-bfs", with_bfs, "run BFS and compare the exact diameter");
    bounds_cmd->add_flag("--with-charsums", with_charsums, "fill character-sum columns");
    bounds_cmd->add_flag("--exact", exact, "exact-arithmetic moment verdict");
    bounds_cmd->add_flag("--timings", timings, "measure runtime (breaks byte-identical output)");
    bounds_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    add_cap_flags(bounds_cmd);

    // charsums
    auto* char_cmd = app.add_subcommand("charsums", "character-sum verification for one cell");
    bool list_sums = false;
    char_cmd->add_option("--q", q, "field size (prime power)")->required()->check(CLI::PositiveNumber);
    char_cmd->add_option("--n", n, "extension degree")->required()->check(CLI::PositiveNumber);
    char_cmd->add_option("--d", d, "generator degree")->required()->check(CLI::PositiveNumber);
    char_cmd->add_option("--modulus", modulus_text, "comma-separated coefficients, constant first");
    char_cmd->add_flag("--list", list_sums, "print the per-character sums table");
    add_cap_flags(char_cmd);

    // repcount
    auto* rep_cmd = app.add_subcommand("repcount", "k-step representation counts over the group");
    bool linear = false, dump = false;
    rep_cmd->add_option("--q", q, "field size (prime power)")->required()->check(CLI::PositiveNumber);
    rep_cmd->add_option("--n", n, "extension degree")->required()->check(CLI::PositiveNumber);
    rep_cmd->add_option("--d", d, "generator degree (mixed counter)")->default_val(1);
    rep_cmd->add_option("--k", k, "number of factors")->required()->check(CLI::PositiveNumber);
    rep_cmd->add_flag("--linear", linear, "degree-one unweighted counter");
    rep_cmd->add_flag("--dump", dump, "print one count per group exponent");
    rep_cmd->add_option("--modulus", modulus_text, "comma-separated coefficients, constant first");
    add_cap_flags(rep_cmd);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "grid of cells to CSV or JSON");
    std::vector<std::uint64_t> q_list;
    std::string n_range, d_range, out_path;
    unsigned jobs = 0;
    sweep_cmd->add_option("--q-list", q_list, "comma-separated field sizes")->required()->delimiter(',');
    sweep_cmd->add_option("--n-range", n_range, "extension degrees A..B")->required();
    sweep_cmd->add_option("--d-range", d_range, "generator degrees A..B")->required();
    sweep_cmd->add_flag("--with-charsums", with_charsums, "fill character-sum columns");
    sweep_cmd->add_flag("--exact", exact, "exact-arithmetic moment verdict");
    sweep_cmd->add_flag("--timings", timings, "measure per-cell runtime");
    sweep_cmd->add_option("--jobs", jobs, "worker threads (default: hardware)");
    sweep_cmd->add_option("--out", out_path, "output file (default: stdout)");
    sweep_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    add_cap_flags(sweep_cmd);

    // selftest
    auto* self_cmd = app.add_subcommand("selftest", "run the full acceptance battery");
    int only = 0;
    self_cmd->add_option("--only", only, "run a single criterion (1-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const precondition_error& e) {  // bad environment variable
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*enum_cmd) return cmd_enumerate(q, d, prime_powers, count_only, format, caps);
        if (*diam_cmd) return cmd_diameter(q, n, d, modulus_text, convention, oracle, histogram, caps);
        if (*bounds_cmd) {
            if (format == "plain") format = "csv";
            return cmd_bounds(q, n, d, modulus_text, with_bfs, with_charsums, exact, timings, format,
                              caps);
        }
        if (*char_cmd) return cmd_charsums(q, n, d, modulus_text, list_sums, caps);
        if (*rep_cmd) {
            if (linear && rep_cmd->count("--d") > 0 && d != 1) {
                std::cerr << "--linear is a degree-one counter; it contradicts --d " << d << "\n";
                return 2;
            }
            return cmd_repcount(q, n, d, k, linear, modulus_text, dump, caps);
        }
        if (*sweep_cmd) {
            if (format == "plain") format = "csv";
            return cmd_sweep(q_list, n_range, d_range, with_charsums, exact, timings, jobs, out_path,
                             format, caps);
        }
        if (*self_cmd) return cmd_selftest(only);
    } catch (const precondition_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
