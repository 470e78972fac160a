/*
   Copyright 2026 the maxkernel authors

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verify.hpp"

using namespace mk;

TEST_CASE("every target runs and passes on a small field") {
    Field f6(2, 1, 6, 1);
    VerifyConfig cfg;
    for (const std::string& target : {"gow", "companion", "prop33", "cor34"}) {
        auto rep = run_verify(f6, target, cfg);
        CHECK(rep.pass);
        CHECK(rep.instances > 0);
        CHECK(rep.target == target);
    }
    Field f7(2, 1, 7, 1);
    for (const std::string& target : {"main-system", "mcg-abc", "neccond", "d3"}) {
        auto rep = run_verify(f7, target, cfg);
        CHECK(rep.pass);
        CHECK(rep.exhaustive);
    }
    Field f15(2, 1, 15, 1);
    VerifyConfig c4;
    c4.d = 4;
    for (const std::string& target : {"even-family", "pascal"}) {
        auto rep = run_verify(f15, target, c4);
        CHECK(rep.pass);
    }
}

TEST_CASE("unknown target and mismatched parameters error out") {
    Field f(2, 1, 7, 1);
    VerifyConfig cfg;
    CHECK_THROWS_AS(run_verify(f, "made-up", cfg), Error);
    try {
        run_verify(f, "made-up", cfg);
    } catch (const Error& e) {
        CHECK(e.code() == Err::UnknownTarget);
    }
    VerifyConfig c4;
    c4.d = 4;
    CHECK_THROWS_AS(run_verify(f, "pascal", c4), Error);   // n != d^2 - 1
    CHECK_THROWS_AS(run_verify(f, "d4", cfg), Error);      // d4 requires --d 4
    Field f9(2, 1, 9, 1);
    CHECK_THROWS_AS(run_verify(f9, "mcg-abc", cfg), Error);  // out of the a/b/c range
}

TEST_CASE("exhaustive-only targets respect the budget") {
    Field f(2, 1, 13, 1);  // 2^26 pairs
    VerifyConfig cfg;
    cfg.d = 4;
    cfg.budget = 1000;
    try {
        run_verify(f, "companion", cfg);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Err::BudgetExceeded);
    }
    // sampled targets still run under a small budget
    auto rep = run_verify(f, "gow", cfg);
    CHECK(rep.pass);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.instances == 1000);
}

TEST_CASE("sampled runs are seed-deterministic") {
    Field f(2, 1, 13, 1);
    VerifyConfig a, b;
    a.d = b.d = 4;
    a.budget = b.budget = 1000;  // force sampling
    a.seed = b.seed = 42;
    auto ra = run_verify(f, "d4", a);
    auto rb = run_verify(f, "d4", b);
    CHECK(ra.to_json(f, a).dump() == rb.to_json(f, b).dump());
}

TEST_CASE("reports render counterexamples with a reproduction line") {
    Field f(2, 1, 7, 1);
    VerifyConfig cfg;
    VerifyReport rep;
    rep.target = "companion";
    rep.pass = false;
    rep.instances = 5;
    rep.counterexamples = {"a=3 b=5 : criteria disagree"};
    rep.repro = "maxkernel verify companion --p 2 --h 1 --n 7 --s 1 --d 3 --budget 67108864 --seed 1";
    std::string text = rep.to_text();
    CHECK(text.find("counterexample: a=3 b=5") != std::string::npos);
    CHECK(text.find("reproduce: maxkernel verify companion") != std::string::npos);
    auto j = rep.to_json(f, cfg);
    CHECK(j["pass"] == false);
    CHECK(j["counterexamples"].size() == 1);
    CHECK(j["repro"].get<std::string>().find("--seed 1") != std::string::npos);
    // passing reports carry the repro line too
    auto ok = run_verify(f, "cor34", cfg);
    CHECK(ok.to_json(f, cfg)["repro"].get<std::string>().find("maxkernel verify cor34") == 0);
}

TEST_CASE("even-family sampled mode under a tight budget") {
    Field f(2, 1, 15, 1);
    VerifyConfig cfg;
    cfg.d = 4;
    cfg.budget = 1000;  // below the 32767-member family
    cfg.seed = 2;
    auto rep = run_verify(f, "even-family", cfg);
    CHECK(rep.pass);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.instances == 1000);
}
