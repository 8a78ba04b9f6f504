/*
   Copyright 2025 The reflektor authors

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

#include "reflektor/suites.hpp"

#include <doctest.h>

#include <json.hpp>

#include <set>

using namespace reflektor;

TEST_CASE("registry") {
    std::set<std::string> ids;
    for (const auto& s : suite_catalog()) {
        CHECK_FALSE(s.subject.empty());
        CHECK(ids.insert(s.id).second);
    }
    CHECK(ids.size() == 15);
    CHECK(profile_from_name("quick") == Profile::quick);
    CHECK(profile_from_name("full") == Profile::full);
    CHECK_FALSE(profile_from_name("fast").has_value());
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("quick profile") {
    for (const auto& s : suite_catalog()) {
        if (s.id == "g27" || s.id == "h4") continue;
        const SuiteReport r = run_suite(s.id, Profile::quick);
        CHECK_MESSAGE(r.passed(), s.id);
        CHECK(r.count(Status::pass) > 0);
        CHECK(r.suite == s.id);
    }
}

TEST_CASE("known conflicts stay isolated") {
    const SuiteReport r = g27_suite();
    std::set<std::string> failing;
    for (const auto* c : r.failures()) failing.insert(c->id);
    CHECK(failing == std::set<std::string>{"g27.g27_b.delta", "g27.g27_d.t_power", "g27.g27_d.delta"});
}

TEST_CASE("reports") {
    SuiteReport r("demo");
    CHECK(r.check("a", true));
    CHECK_FALSE(r.check("b", false, "detail"));
    r.skip("c", "reason");
    CHECK_FALSE(r.passed());
    CHECK(r.count(Status::skipped) == 1);
    const std::string j1 = r.to_json(true);
    CHECK(j1 == r.to_json(true));
    const auto j = nlohmann::json::parse(j1);
    CHECK(j.at("suite") == "demo");
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(run_suite("theta", Profile::quick).to_json(true) == run_suite("theta", Profile::quick).to_json(true));
}
