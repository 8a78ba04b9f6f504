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

#pragma once

#include <string>
#include <vector>

namespace reflektor {

enum class Status { pass, fail, skipped };

const char* status_name(Status s);

struct CaseResult {
    std::string id;
    Status status = Status::pass;
    std::string detail;
};

/// Outcome of one suite; passes iff no case failed.
struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double elapsed_ms = 0;
    std::string version = REFLEKTOR_VERSION;

    explicit SuiteReport(std::string id = {}) : suite(std::move(id)) {}

    bool passed() const;
    std::size_t count(Status s) const;
    /// Records a pass/fail case and returns ok.
    bool check(const std::string& id, bool ok, const std::string& detail = {});
    void skip(const std::string& id, const std::string& reason);
    void merge(const SuiteReport& other, const std::string& prefix = {});
    std::vector<const CaseResult*> failures() const;

    /// JSON; timing is omitted when stable is true so output is byte-reproducible.
    std::string to_json(bool stable = false) const;
    std::string to_text(bool verbose = false) const;
};

}  // namespace reflektor
