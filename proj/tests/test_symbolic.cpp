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

#include "reflektor/symbolic.hpp"

#include <doctest.h>

using namespace reflektor;

namespace {
const MPoly al = MPoly::var(Var::alpha), be = MPoly::var(Var::beta), l = MPoly::var(Var::l), m = MPoly::var(Var::m);
}

TEST_CASE("generators") {
    const auto s = sym_generators();
    for (const auto& g : s) {
        CHECK((g * g).is_identity());
        CHECK(g.is_reflection());
    }
    CHECK((s[0] * s[1])(0, 0) == al - MPoly(1));
}

TEST_CASE("pairings") {
    const auto s = sym_generators();
    CHECK(pair_C(s[0], s[1]) == al);
    CHECK(pair_C(s[1], s[2]) == l * m);
    CHECK(pair_C(s[1], sym_conj(s[2], {1})) == (al + m) * (be + l));
    CHECK(pair_C(s[0], s[0]) == MPoly(4));
    CHECK(pair_C(s[0], sym_conj(s[1], {3})) == al + be * l * m + al * l + be * m);
    CHECK_THROWS_AS(pair_C(s[0] * s[1], s[2]), std::invalid_argument);
}

TEST_CASE("invariants") {
    CHECK(sym_theta_prime() - sym_theta() == sym_delta());
    CHECK(sym_gamma() == l * m);
}

TEST_CASE("closed-form suites") {
    CHECK(verify_power_formulas(-4, 4).passed());
    CHECK(verify_reflection_formulas(-4, 4).passed());
    CHECK(verify_charpoly_catalog(-3, 3).passed());
    CHECK(verify_C_catalog(-3, 3).passed());
}

TEST_CASE("sparse polynomial properties") {
    const MPoly a = al * al - be * l + MPoly(3), b = m * l - al + MPoly(Rational::make(1, 2)), c = be.pow(3) - MPoly(2);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == MPoly(0));
    CHECK((a * b).degree_in(Var::alpha) == 3);
    CHECK(a.eval({Rational(1), Rational(2), Rational(3), Rational(4)}) == Rational(-2));
    // (l + 1) m + l divides (lm + l + m)(alpha - beta)
    CHECK(divisible_by_linear((l * m + l + m) * (al - be), Var::m, l + MPoly(1), l));
    CHECK_FALSE(divisible_by_linear(l * m + MPoly(1), Var::m, l + MPoly(1), l));
}
