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

#include "reflektor/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reflektor {

enum class Profile { quick, full };

std::optional<Profile> profile_from_name(const std::string& name);

struct SuiteInfo {
    std::string id;
    std::string subject;
};

/// Registered suites in run order.
const std::vector<SuiteInfo>& suite_catalog();

/// Throws std::invalid_argument for an unknown id.
SuiteReport run_suite(const std::string& id, Profile profile = Profile::full);
std::vector<SuiteReport> run_all(Profile profile);

// Building blocks shared by the registry and the acceptance gate.
SuiteReport identity_catalog_suite(long cap_bound);
SuiteReport factorization_suite(long n_max);
SuiteReport theta_suite(long n_max);
SuiteReport symbolic_suite();
SuiteReport h3_suite();
SuiteReport coxeter_folds_suite();
SuiteReport h4_suite();
SuiteReport affine_suite();
SuiteReport gnn3_suite();
SuiteReport g24_suite();
SuiteReport g27_suite();
SuiteReport folding_suite();

}  // namespace reflektor
