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

#include "reflektor/report.hpp"

#include <json.hpp>

#include <sstream>

namespace reflektor {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

bool SuiteReport::passed() const { return count(Status::fail) == 0; }

std::size_t SuiteReport::count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.status == s;
    return n;
}

bool SuiteReport::check(const std::string& id, bool ok, const std::string& detail) {
    cases.push_back({id, ok ? Status::pass : Status::fail, detail});
    return ok;
}

void SuiteReport::skip(const std::string& id, const std::string& reason) {
    cases.push_back({id, Status::skipped, reason});
}

void SuiteReport::merge(const SuiteReport& other, const std::string& prefix) {
    for (auto c : other.cases) {
        if (!prefix.empty()) c.id = prefix + "/" + c.id;
        cases.push_back(std::move(c));
    }
    elapsed_ms += other.elapsed_ms;
}

std::vector<const CaseResult*> SuiteReport::failures() const {
    std::vector<const CaseResult*> out;
    for (const auto& c : cases)
        if (c.status == Status::fail) out.push_back(&c);
    return out;
}

std::string SuiteReport::to_json(bool stable) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["artifact_version"] = version;
    j["pass"] = passed();
    j["counts"] = {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"skipped", count(Status::skipped)}};
    if (!stable) j["elapsed_ms"] = elapsed_ms;
    auto arr = nlohmann::ordered_json::array();
    auto fails = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["status"] = status_name(c.status);
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (c.status == Status::fail) fails.push_back(c.id);
        arr.push_back(std::move(e));
    }
    j["cases"] = std::move(arr);
    j["failures"] = std::move(fails);
    return j.dump(2);
}

std::string SuiteReport::to_text(bool verbose) const {
    std::ostringstream os;
    os << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << count(Status::pass) << " pass, "
       << count(Status::fail) << " fail, " << count(Status::skipped) << " skipped)\n";
    for (const auto& c : cases) {
        if (!verbose && c.status == Status::pass) continue;
        os << "  [" << status_name(c.status) << "] " << c.id;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    return os.str();
}

}  // namespace reflektor
