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

#include "reflektor/cyclo.hpp"
#include "reflektor/field_suites.hpp"

#include <doctest.h>

#include <random>

using namespace reflektor;

TEST_CASE("field contexts") {
    CHECK(field_ctx(5).deg == 4);
    CHECK(field_ctx(5).modulus == UPoly::parse("X^4 + X^3 + X^2 + X + 1"));
    CHECK(field_ctx(1).deg == 1);
    CHECK(field_ctx(12).modulus == UPoly::parse("X^4 - X^2 + 1"));
}

TEST_CASE("arithmetic examples") {
    const FieldCtx& f = field_ctx(5);
    CHECK((CycloElem::zeta(f, 1) * CycloElem::zeta(f, 4)).is_one());
    CHECK(eval_at(u_poly(5), root_of_v(5, 1)).is_zero());
    CHECK(CycloElem(f, Rational(2)).inverse() == CycloElem(f, Rational::make(1, 2)));
    CHECK_THROWS(CycloElem(f).inverse());
}

TEST_CASE("roots and square roots") {
    CHECK(root_of_v(5, 1) == named_constant("tau"));
    CHECK(root_of_v(4, 1).rational_value() == Rational(2));
    CHECK(root_of_v(3, 1).rational_value() == Rational(1));
    const CycloElem s5 = sqrt_root(5, 1);
    CHECK(s5 * s5 == root_of_v(5, 1).lift(s5.ctx()));
    CHECK(sqrt_root(3, 1).is_one());
    const CycloElem r2 = sqrt_root(4, 1);
    CHECK((r2 * r2).rational_value() == Rational(2));
    CHECK_THROWS(root_of_v(6, 2));
}

TEST_CASE("norms") {
    CHECK(galois_norm(root_of_v(4, 1)) == Rational(4));
    CHECK(galois_norm(root_of_v(3, 1)) == Rational(1));
    CHECK(galois_norm(root_of_v(6, 1)) == Rational(9));
}

TEST_CASE("named constants") {
    const CycloElem t = named_constant("tau");
    CHECK((t * t - t * Rational(3) + CycloElem(t.ctx(), Rational(1))).is_zero());
    const CycloElem w = named_constant("omega");
    CHECK((w * w + w + CycloElem(w.ctx(), Rational(1))).is_zero());
    const CycloElem z = named_constant("zeta7_half");
    CHECK((z * z - z + CycloElem(z.ctx(), Rational(2))).is_zero());
    CHECK_THROWS(named_constant("pi"));
}

TEST_CASE("quadratic powers") {
    const CycloElem phi = sqrt_root(5, 1);
    const QuadExtElem a5 = quad_pow(phi, -1, 5);
    CHECK(a5.y.is_zero());
    CHECK(a5.x == CycloElem(phi.ctx(), Rational(-1)));
    CHECK(quad_pow(phi, -1, 10).x.is_one());
    const CycloElem one(field_ctx(3), Rational(1));
    CHECK(quad_pow(one, -1, 3).x == -one);
    CHECK(quad_pow(one, -1, 3).y.is_zero());
    CHECK(quad_pow(one, -1, 6).x.is_one());
    const CycloElem zero(field_ctx(4));
    CHECK(quad_pow(zero, -1, 2).x == CycloElem(zero.ctx(), Rational(-1)));
    const FieldCtx& f12 = field_ctx(12);
    const CycloElem i = CycloElem::zeta(f12, 3);
    const CycloElem phip = i * sqrt_root(3, 1).lift(f12);
    const QuadExtElem a3 = quad_pow(phip, 1, 3);
    CHECK(a3.y.is_zero());
    CHECK(a3.x == i);  // (-1)^(n+k) eps i with n = k = eps = 1
}

TEST_CASE("field suites at small bounds") {
    CHECK(root_identity_suite(14).passed());
    CHECK(norm_invertibility_suite(14).passed());
    CHECK(quad_power_suite(9).passed());
    const ClassificationResult r = classification_search(8);
    CHECK(r.product_solutions == std::set<RootTriple>{{{4, 1}, {4, 1}, {3, 1}}});
    CHECK(r.sum_solutions == std::set<RootTriple>{{{3, 1}, {3, 1}, {4, 1}}, {{3, 1}, {5, 1}, {5, 2}}});
    CHECK(r.skipped == 0);
    CHECK(classification_search(5).sum_solutions.count({{3, 1}, {3, 1}, {3, 1}}) == 0);
}

TEST_CASE("field properties on random elements") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c(-6, 6);
    for (long N : {5L, 7L, 12L, 15L}) {
        const FieldCtx& f = field_ctx(N);
        auto draw = [&] {
            CycloElem x(f);
            for (long e = 0; e < N; ++e) x += CycloElem::zeta(f, e) * Rational::make(c(rng), 1 + (e % 3));
            return x;
        };
        const FieldCtx& big = field_ctx(2 * N);
        for (int t = 0; t < 25; ++t) {
            const CycloElem a = draw(), b = draw();
            CHECK(a * b == b * a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
            CHECK((a * b).lift(big) == a.lift(big) * b.lift(big));
            CHECK((a * b).galois(N - 1) == a.galois(N - 1) * b.galois(N - 1));
            CHECK(galois_norm(a * b) == galois_norm(a) * galois_norm(b));
            CHECK(std::abs((a * b).embed(1) - a.embed(1) * b.embed(1)) < 1e-6);
        }
    }
}
