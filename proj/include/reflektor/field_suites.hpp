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

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace reflektor {

/// Symmetry, periodicity and product identities of u_n evaluated at roots of v_r, r <= r_max.
SuiteReport root_identity_suite(long r_max);

/// Integral inverse certificates and norms for gamma and 4 - gamma, r <= r_max.
SuiteReport norm_invertibility_suite(long r_max);

/// Closed forms and finite-order claims for a^2 = phi a +- 1.
SuiteReport quad_power_suite(long n_max);

/// Basic invariants of root_of_v / sqrt_root / galois_norm.
SuiteReport root_invariant_suite(long n_max);

/// A root label (p, k) stands for zeta_p^k + zeta_p^-k + 2.
using RootLabel = std::pair<long, long>;
using RootTriple = std::vector<RootLabel>;

struct ClassificationResult {
    /// alpha * beta == 4 gamma, ordered (alpha, beta, gamma).
    std::set<RootTriple> product_solutions;
    /// alpha + beta + gamma == 4, stored sorted.
    std::set<RootTriple> sum_solutions;
    long checked = 0;
    long skipped = 0;
    /// conductor -> skipped ordered triples.
    std::map<long, long> skipped_by_conductor;
};

/// Exhaustive search over 3 <= p, q, r <= bound; conductors with phi above cap are skipped.
ClassificationResult classification_search(long bound, long cap = 200);

/// Compares the search against the two known solution sets.
SuiteReport classification_suite(long bound, long cap = 200);

}  // namespace reflektor
