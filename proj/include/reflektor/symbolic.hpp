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

#include "reflektor/matrix.hpp"
#include "reflektor/mpoly.hpp"
#include "reflektor/report.hpp"

#include <array>

namespace reflektor {

using SymMatrix = SquareMatrix<MPoly>;

/// The three generic rank-3 generators, with gamma = l*m.
std::array<SymMatrix, 3> sym_generators();

/// tr((s - I)(t - I)); throws std::invalid_argument unless both are reflections.
MPoly pair_C(const SymMatrix& s, const SymMatrix& t);

MPoly sym_gamma();
MPoly sym_delta();
MPoly sym_theta();
MPoly sym_theta_prime();

/// x^w = w^-1 x w for a word w of generator indices (1-based).
SymMatrix sym_conj(const SymMatrix& x, std::initializer_list<int> word);

/// Integer power, negative exponents through the inverse of a unimodular product.
SymMatrix sym_pow(const SymMatrix& m, long k);

SuiteReport verify_power_formulas(long k_lo, long k_hi);
SuiteReport verify_reflection_formulas(long k_lo, long k_hi);
SuiteReport verify_C_catalog(long k_lo = -8, long k_hi = 8);
SuiteReport verify_charpoly_catalog(long k_lo, long k_hi);
/// Half-turn formulas (even orders) at concrete roots over cyclotomic fields.
SuiteReport verify_half_turn_catalog();

}  // namespace reflektor
