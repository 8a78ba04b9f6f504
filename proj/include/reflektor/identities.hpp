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

#include "reflektor/upoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reflektor {

enum class IdentityTag {
    recur_even_step,
    recur_odd_step,
    recurrence,
    shift_sum_even,
    shift_sum_odd_at_even,
    shift_sum_odd_at_odd,
    double_product,
    double_minus,
    double_plus,
    double_odd_at_even_a,
    double_odd_at_even_b,
    double_odd_at_odd_a,
    double_odd_at_odd_b,
    reflect_even,
    reflect_square,
    split_even,
    split_odd_a,
    split_odd_b,
    split_odd_minus_a,
    split_odd_minus_b,
    quad_plus_a,
    quad_plus_b,
    quad_minus_a,
    quad_minus_b,
    square_odd,
    square_even,
    gap_plus,
    gap_minus,
    mix_even_a,
    mix_even_b,
    mix_odd_a,
    mix_odd_b,
};

struct IdentitySpec {
    IdentityTag tag;
    std::string name;
    int arity;  // number of integer indices (1 or 2)
    std::string statement;
    std::function<bool(long, long)> admissible;
    std::function<std::pair<UPoly, UPoly>(long, long)> sides;
    long default_bound;
};

const std::vector<IdentitySpec>& identity_catalog();
const IdentitySpec& identity_spec(IdentityTag tag);
std::optional<IdentityTag> identity_from_name(const std::string& name);

struct IdentityReport {
    IdentityTag tag;
    bool pass = true;
    long checked = 0;
    long skipped = 0;
    std::vector<std::vector<long>> failures;
};

/// Checks every admissible index tuple with each index in [lo, hi].
IdentityReport check_identity(IdentityTag tag, long lo, long hi);

struct ThetaReport {
    bool pass = true;
    long checked = 0;
    std::vector<long> mismatches;
};

/// Expected product of the roots of v_n: p when n = 2 p^k (k >= 1), else 1.
long theta_v_expected(long n);
ThetaReport theta_v_suite(long n_max);

}  // namespace reflektor
