// Copyright 2026-present the excezero project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "excezero/errors.hpp"
#include "excezero/suite/config.hpp"
#include "excezero/suite/dataset.hpp"
#include "excezero/suite/suite.hpp"

using namespace excezero;
using namespace excezero::suite;

TEST_CASE("built-in dataset") {
    auto all = builtin_dataset();
    CHECK(all.size() >= 4);
    for (const auto& e : all) {
        CHECK(tate::check_split_multiplicative(e, e.p()).split);
        CHECK(e.sign() != 0);
    }
    CHECK(select_curves(all, "11a1", 0).size() == 1);
    CHECK(select_curves(all, "", 11).size() == 3);
    CHECK(select_curves(all, "nope", 0).empty());
    CHECK(select_curves(all, "", 0).size() == all.size());
}

TEST_CASE("dataset parse errors carry line numbers") {
    const std::string ok = "11a1 [0,-1,1,-10,-20] 11 +1\n";
    CHECK(parse_dataset(ok).size() == 1);
    CHECK(parse_dataset("# comment\n\n" + ok).size() == 1);

    auto msg = [](const std::string& text) {
        try {
            parse_dataset(text, "t.txt");
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    // singular model: y^2 = x^3
    CHECK(msg(ok + "sing [0,0,0,0,0] 11 +1\n").find("t.txt:2") != std::string::npos);
    CHECK(msg(ok + ok).find("t.txt:2") != std::string::npos);
    CHECK(msg("11a1 [0,-1,1,-10] 11 +1\n").find("t.txt:1") != std::string::npos);
    CHECK(msg("11a1 [0,-1,1,-10,x/0] 11 +1\n").find("t.txt:1") != std::string::npos);
    // 11a1 has good reduction at 7
    CHECK(msg("11a1 [0,-1,1,-10,-20] 7 +1\n").find("t.txt:1") != std::string::npos);
}

TEST_CASE("dataset file ingestion") {
    const std::string path = "excezero_test_dataset.txt";
    {
        std::ofstream f(path);
        f << builtin_dataset_text();
    }
    CHECK(ingest_dataset(path).size() == builtin_dataset().size());
    std::remove(path.c_str());
    CHECK_THROWS_AS(ingest_dataset("/nonexistent/curves.txt"), ParseError);
}

TEST_CASE("run configuration") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    auto j = RunConfig::from_json_text(R"({"precision": 9, "max_level": 2, "timings": true})");
    CHECK(j.precision == 9);
    CHECK(j.max_level == 2);
    CHECK(j.timings);
    CHECK(j.complex_digits == c.complex_digits);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"precison": 9})"), ParseError);
    CHECK_THROWS(RunConfig::from_json_text("{not json"));
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"max_level": 5})"), ValidationError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"precision": 0})"), ValidationError);
    auto base = RunConfig::from_json_text(R"({"precision": 7})", j);
    CHECK(base.precision == 7);
    CHECK(base.max_level == 2);
}

TEST_CASE("check names round trip") {
    for (Check c : all_checks()) {
        CHECK(parse_check(to_string(c)) == c);
    }
    CHECK_THROWS_AS(parse_check("everything"), ValidationError);
}

TEST_CASE("empty selection gives an empty passing report") {
    RunConfig c;
    auto r = run_suite(c, builtin_dataset(), {});
    CHECK(r.records.empty());
    CHECK(r.passed());
    auto none = run_suite(c, {}, {Check::trivial_zero, Check::gs});
    CHECK(none.records.empty());
}

TEST_CASE("curves without split multiplicative reduction are rejected") {
    // 20a1 has multiplicative reduction at 5 with a_5 = -1
    auto e = tate::CurveData::make("20a1", {0, 1, 0, 4, 4}, 5, 1);
    auto s = tate::check_split_multiplicative(e, 5);
    REQUIRE_FALSE(s.split);
    CHECK(s.reduction == tate::Reduction::nonsplit_multiplicative);
    RunConfig c;
    CHECK_THROWS_AS(run_suite(c, {e}, {Check::trivial_zero}), ValidationError);
    // jets do not touch the curves
    CHECK_NOTHROW(run_suite(c, {e}, {Check::jets}));
}

TEST_CASE("reports are deterministic and record every anchor") {
    RunConfig c;
    c.precision = 8;
    c.max_level = 2;
    c.coleman_precision = 4;
    auto curves = select_curves(builtin_dataset(), "15a1", 5);
    std::vector<Check> checks{Check::trivial_zero, Check::funceq, Check::derivative_model,
                              Check::coleman, Check::jets};
    c.threads = 1;
    auto a = run_suite(c, curves, checks);
    c.threads = 3;
    auto b = run_suite(c, curves, checks);
    CHECK(a.render() == b.render());
    CHECK(a.to_json() == b.to_json());
    CHECK(a.passed());
    for (const auto& r : a.records) {
        CHECK_FALSE(r.anchor.empty());
    }
    CHECK(a.render().find("time:") == std::string::npos);
    CHECK(a.render(true) != a.render());
}

TEST_CASE("precision failures are recorded, not thrown") {
    RunConfig c;
    c.precision = 2;
    c.max_level = 1;
    auto curves = select_curves(builtin_dataset(), "11a1", 11);
    auto r = run_suite(c, curves, {Check::gs, Check::jets});
    REQUIRE(r.records.size() == 1 + 5);
    CHECK(r.records.front().check == "gs");
}
