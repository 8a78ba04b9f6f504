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

// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.

#include "reflektor/field_suites.hpp"
#include "reflektor/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace reflektor;

namespace {

struct Criterion {
    std::string id;
    std::string what;
    std::function<SuiteReport()> run;
};

std::vector<Criterion> criteria() {
    return {
        {"AC1", "u-polynomial identity catalog", [] { return identity_catalog_suite(50); }},
        {"AC2", "product of v_d over d | n equals u_n, n <= 200", [] { return factorization_suite(200); }},
        {"AC3", "theta(v_n) classification, n <= 500", [] { return theta_suite(500); }},
        {"AC4", "identities at roots of v_r, r <= 30", [] { return root_identity_suite(30); }},
        {"AC5", "unit certificates for gamma and 4 - gamma, r <= 30", [] { return norm_invertibility_suite(30); }},
        {"AC6", "cyclotomic solution sets at bound 12", [] { return classification_suite(12); }},
        {"AC7", "generic rank-3 closed forms", [] { return symbolic_suite(); }},
        {"AC8", "six W(H3) presentations", [] { return h3_suite(); }},
        {"AC9", "folded A3, B3, H3 and affine G2", [] { return coxeter_folds_suite(); }},
        {"AC10", "five W(H4) presentations", [] { return h4_suite(); }},
        {"AC11", "G(p,p,n) from affine A_{n-1}", [] { return affine_suite(); }},
        {"AC12", "G(n,n,3) presentations", [] { return gnn3_suite(); }},
        {"AC13", "G24 presentations", [] { return g24_suite(); }},
        {"AC14", "G27 presentations", [] { return g27_suite(); }},
        {"AC15", "W(p,p,r) folding onto W(p,r,2)", [] { return folding_suite(); }},
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reflektor acceptance gate"};
    std::vector<std::string> expect_red, only;
    bool verbose = false;
    app.add_option("--expect-red", expect_red, "criteria known to be red; exit 0 iff the red set equals this list");
    app.add_option("--only", only, "run only these criteria");
    app.add_flag("-v,--verbose", verbose, "print every failing case");
    CLI11_PARSE(app, argc, argv);

    const std::set<std::string> selected(only.begin(), only.end());
    std::set<std::string> red;
    for (const Criterion& c : criteria()) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const SuiteReport r = c.run();
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = r.passed() && r.count(Status::pass) > 0;
        if (!ok) red.insert(c.id);
        std::cout << c.id << " " << c.what << ": " << (ok ? "PASS" : "FAIL") << " (" << r.count(Status::pass) << " pass, "
                  << r.count(Status::fail) << " fail, " << static_cast<long>(ms) << " ms)\n";
        const auto fails = r.failures();
        for (std::size_t i = 0; i < fails.size() && (verbose || i < 8); ++i)
            std::cout << "    - " << fails[i]->id << (fails[i]->detail.empty() ? "" : ": " + fails[i]->detail) << "\n";
    }
    const std::set<std::string> expected(expect_red.begin(), expect_red.end());
    std::cout << "red: " << red.size() << (red.empty() ? "" : " [");
    for (auto it = red.begin(); it != red.end(); ++it) std::cout << (it == red.begin() ? "" : " ") << *it;
    std::cout << (red.empty() ? "" : "]") << "\n";
    if (!expect_red.empty()) {
        std::cout << "expected red: " << (red == expected ? "match" : "MISMATCH") << "\n";
        return red == expected ? 0 : 1;
    }
    return red.empty() ? 0 : 1;
}
