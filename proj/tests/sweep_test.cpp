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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "polydiam/sweep.hpp"

using namespace polydiam;

TEST(CellGridTest, DeterministicFeasibleOrder) {
    auto cells = make_cells({3, 2}, 2, 4, 1, 3);
    // per q: (2,1) (3,1) (3,2) (4,1) (4,2) (4,3); q order as listed
    ASSERT_EQ(cells.size(), 12u);
    EXPECT_EQ(cells[0].q, 3u);
    EXPECT_EQ(cells[6].q, 2u);
    EXPECT_EQ(cells[0].n, 2u);
    EXPECT_EQ(cells[0].d, 1u);
    EXPECT_EQ(cells[5].n, 4u);
    EXPECT_EQ(cells[5].d, 3u);
    for (const auto& c : cells) EXPECT_LT(c.d, c.n);
    EXPECT_THROW(make_cells({2}, 3, 2, 1, 1), precondition_error);
    EXPECT_THROW(make_cells({2}, 0, 2, 1, 1), precondition_error);
}

TEST(RunCellTest, FullPipelineSmallCell) {
    CellOptions opt;
    opt.with_charsums = true;
    CellResult res = run_cell(CellSpec{5, 3, 1, std::nullopt}, opt);
    const ReportRow& r = res.row;
    EXPECT_EQ(r.status, "ok");
    EXPECT_FALSE(res.violation);
    EXPECT_EQ(r.f, "1,1,0,1");  // X^3+X+1, the canonically first cubic irreducible over F_5
    ASSERT_TRUE(r.connected.has_value());
    EXPECT_TRUE(*r.connected);
    ASSERT_TRUE(r.diameter.has_value());
    ASSERT_TRUE(r.bound_thm2.has_value());
    EXPECT_LE(static_cast<double>(*r.diameter), *r.bound_thm2);
    EXPECT_FALSE(r.bound_thm1.has_value());  // d = 1
    ASSERT_TRUE(r.max_weil_ratio.has_value());
    EXPECT_LE(*r.max_weil_ratio, 1.0 + 1e-6);
    ASSERT_TRUE(r.moment_pass.has_value());
    EXPECT_TRUE(*r.moment_pass);
    EXPECT_FALSE(r.runtime_ms.has_value());  // timings are opt-in
    EXPECT_EQ(r.regularity.value(), 5u);     // degree-1 prime powers
}

TEST(RunCellTest, ExplicitModulusIsHonored) {
    CellOptions opt;
    CellResult res = run_cell(CellSpec{2, 3, 1, std::string("1,0,1,1")}, opt);
    EXPECT_EQ(res.row.f, "1,0,1,1");
    CellResult other = run_cell(CellSpec{2, 3, 1, std::nullopt}, opt);
    EXPECT_EQ(other.row.f, "1,1,0,1");
    // alternative modulus gives an isomorphic graph: same diameter
    EXPECT_EQ(res.row.diameter.value(), other.row.diameter.value());
}

TEST(RunCellTest, DisconnectedOutsideBoundRegimeIsDataNotViolation) {
    // q=5, n=5, d=1: every degree-one evaluation is a square, so the
    // generators span only the index-2 subgroup.  No bound precondition
    // holds here ((n-1)^2 = 16 >= 5), so this is a reportable fact.
    CellOptions opt;
    CellResult res = run_cell(CellSpec{5, 5, 1, std::nullopt}, opt);
    ASSERT_TRUE(res.row.connected.has_value());
    EXPECT_FALSE(*res.row.connected);
    EXPECT_FALSE(res.row.diameter.has_value());
    EXPECT_FALSE(res.row.bound_lwwz.has_value());
    EXPECT_FALSE(res.row.bound_thm2.has_value());
    EXPECT_FALSE(res.violation);
    EXPECT_EQ(res.row.status, "ok");
}

TEST(RunCellTest, CapSkipsCellInsteadOfThrowing) {
    CellOptions opt;
    opt.max_order = 100;  // 5^4 - 1 = 624 exceeds this
    CellResult res = run_cell(CellSpec{5, 4, 2, std::nullopt}, opt);
    EXPECT_EQ(res.row.status, "skipped");
    EXPECT_FALSE(res.row.connected.has_value());
    EXPECT_FALSE(res.row.diameter.has_value());
    EXPECT_TRUE(res.row.bound_lwwz.has_value());  // closed forms still reported
    ASSERT_FALSE(res.notes.empty());
    EXPECT_NE(res.notes[0].find("POLYDIAM_MAX_ORDER"), std::string::npos);
    EXPECT_NE(res.notes[0].find("q=5"), std::string::npos);
}

TEST(RunCellTest, TimingsOptIn) {
    CellOptions opt;
    opt.timings = true;
    CellResult res = run_cell(CellSpec{2, 3, 1, std::nullopt}, opt);
    ASSERT_TRUE(res.row.runtime_ms.has_value());
    EXPECT_GE(*res.row.runtime_ms, 0.0);
}

TEST(RunSweepTest, ResultsInInputOrderAndRederivable) {
    CellOptions opt;
    opt.with_charsums = true;
    auto cells = make_cells({2, 3, 5}, 2, 5, 1, 2);
    auto results = run_sweep(cells, opt, 1);
    ASSERT_EQ(results.size(), cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        EXPECT_EQ(results[i].row.q, cells[i].q);
        EXPECT_EQ(results[i].row.n, cells[i].n);
        EXPECT_EQ(results[i].row.d, cells[i].d);
        EXPECT_FALSE(results[i].violation);
        // the single-cell pipeline reproduces the sweep row byte for byte
        CellResult single = run_cell(cells[i], opt);
        EXPECT_EQ(report_row_to_csv(single.row), report_row_to_csv(results[i].row));
    }
    // repeated run is byte-identical
    auto again = run_sweep(cells, opt, 1);
    EXPECT_EQ(rows_to_csv(results), rows_to_csv(again));
    EXPECT_EQ(rows_to_json(results), rows_to_json(again));
}

TEST(RunSweepTest, MultiWorkerMatchesSequential) {
    CellOptions opt;
    auto cells = make_cells({2, 3}, 2, 6, 1, 3);
    auto seq = run_sweep(cells, opt, 1);
    auto par = run_sweep(cells, opt, 4);
    EXPECT_EQ(rows_to_csv(seq), rows_to_csv(par));
}

TEST(SerializationTest, CsvShape) {
    CellOptions opt;
    auto results = run_sweep(make_cells({2}, 3, 3, 1, 2), opt, 1);
    std::string csv = rows_to_csv(results);
    std::vector<std::string> lines;
    std::size_t pos = 0;
    for (std::size_t nl; (nl = csv.find('\n', pos)) != std::string::npos; pos = nl + 1) {
        lines.push_back(csv.substr(pos, nl - pos));
    }
    ASSERT_EQ(lines.size(), 3u);  // header + 2 cells
    EXPECT_EQ(lines[0], report_row_csv_header());
    EXPECT_EQ(lines[0].substr(0, 8), "q,n,d,f,");
    // the modulus string is quoted so its commas stay inside one column
    EXPECT_NE(lines[1].find("\"1,1,0,1\""), std::string::npos);
    // no-BFS-was-requested defaults: weil and moment columns are NA
    EXPECT_NE(lines[1].find("NA"), std::string::npos);
    for (const auto& l : lines) EXPECT_FALSE(l.empty());
}

TEST(SerializationTest, JsonNullsAndKeys) {
    CellOptions opt;
    opt.with_bfs = false;
    auto results = run_sweep(make_cells({2}, 3, 3, 1, 1), opt, 1);
    auto arr = nlohmann::ordered_json::parse(rows_to_json(results));
    ASSERT_TRUE(arr.is_array());
    ASSERT_EQ(arr.size(), 1u);
    const auto& obj = arr[0];
    EXPECT_EQ(obj["q"], 2);
    EXPECT_EQ(obj["f"], "1,1,0,1");
    EXPECT_TRUE(obj["connected"].is_null());   // BFS disabled
    EXPECT_TRUE(obj["diameter"].is_null());
    EXPECT_TRUE(obj["runtime_ms"].is_null());
    EXPECT_EQ(obj["status"], "ok");
    ASSERT_TRUE(obj.contains("max_weil_ratio"));
    EXPECT_TRUE(obj["max_weil_ratio"].is_null());
    // key order is the documented column order
    std::vector<std::string> keys;
    for (auto it = obj.begin(); it != obj.end(); ++it) keys.push_back(it.key());
    ASSERT_EQ(keys.size(), 16u);
    EXPECT_EQ(keys.front(), "q");
    EXPECT_EQ(keys[3], "f");
    EXPECT_EQ(keys.back(), "status");
}

TEST(SerializationTest, DoubleFormattingIsShortestRoundTrip) {
    EXPECT_EQ(detail::double_to_string(5.0), "5");
    EXPECT_EQ(detail::double_to_string(0.5), "0.5");
    const double v = 37.062837195053899;
    const std::string s = detail::double_to_string(v);
    EXPECT_EQ(std::stod(s), v);
}

TEST(ViolationTest, DisconnectedOrBoundBreakSetsFlag) {
    // no real cell violates; exercise the flag through a skipped cell's
    // absence and a healthy cell's presence
    CellOptions opt;
    CellResult ok = run_cell(CellSpec{3, 3, 2, std::nullopt}, opt);
    EXPECT_FALSE(ok.violation);
    EXPECT_TRUE(ok.notes.empty());
}
