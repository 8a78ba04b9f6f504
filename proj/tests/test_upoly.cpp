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

#include "reflektor/identities.hpp"
#include "reflektor/upoly.hpp"

#include <doctest.h>

using namespace reflektor;

TEST_CASE("u and v polynomials") {
    CHECK(u_poly(5) == UPoly::parse("X^2 - 3*X + 1"));
    CHECK(u_poly(7) == UPoly::parse("X^3 - 5*X^2 + 6*X - 1"));
    CHECK(u_poly(-3) == -u_poly(3));
    CHECK(u_poly(0).is_zero());
    CHECK(v_poly(4) == UPoly::parse("X - 2"));
    CHECK(v_poly(6) == UPoly::parse("X - 3"));
    CHECK(v_poly(5) == u_poly(5));
    CHECK(v_poly(1) == UPoly{1});
    CHECK(v_poly(2) == UPoly{1});
}

TEST_CASE("polynomial arithmetic examples") {
    const UPoly a = UPoly::parse("X - 1"), b = UPoly::parse("X - 3");
    CHECK(a * b == UPoly::parse("X^2 - 4*X + 3"));
    CHECK(a * b == u_poly(6));
    const auto [q, r] = divrem(a * b, a);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK(compose(u_poly(4), UPoly::parse("4 - X")) == UPoly::parse("2 - X"));
}

TEST_CASE("n' and theta") {
    CHECK(n_prime(3) == 6);
    CHECK(n_prime(6) == 3);
    CHECK(n_prime(8) == 8);
    CHECK(theta(u_poly(6)) == Rational(3));
    CHECK(theta(u_poly(5)) == Rational(1));
    CHECK(theta(v_poly(4)) == Rational(2));
    CHECK(theta(v_poly(18)) == Rational(3));
    CHECK(theta(v_poly(12)) == Rational(1));
    CHECK(theta(v_poly(8)) == Rational(2));
    CHECK_THROWS(theta(UPoly::parse("2*X + 1")));
}

TEST_CASE("degrees and factorization") {
    for (long n = 0; n < 40; ++n) {
        CHECK(u_poly(2 * n + 1).degree() == n);
        CHECK(u_poly(2 * n + 2).degree() == n);
    }
    for (long n = 3; n <= 80; ++n) {
        UPoly p{1};
        for (long d : divisors(n)) p = p * v_poly(d);
        CHECK(p == u_poly(n));
        CHECK(v_poly(n).is_monic());
        CHECK(v_poly(n).is_integral());
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == UPoly::parse("X - 1"));
    CHECK(cyclotomic(5) == UPoly::parse("X^4 + X^3 + X^2 + X + 1"));
    CHECK(cyclotomic(12) == UPoly::parse("X^4 - X^2 + 1"));
    for (long n = 1; n <= 60; ++n) CHECK(cyclotomic(n).degree() == euler_phi(n));
}

TEST_CASE("identity catalog examples") {
    CHECK(check_identity(IdentityTag::recurrence, -20, 20).pass);
    CHECK(check_identity(IdentityTag::double_product, -10, 10).pass);
    for (const auto& spec : identity_catalog()) {
        const IdentityReport r = check_identity(spec.tag, -12, 12);
        CHECK_MESSAGE(r.pass, spec.name);
        CHECK_MESSAGE(r.checked > 0, spec.name);
        CHECK(identity_from_name(spec.name) == spec.tag);
    }
    CHECK_FALSE(identity_from_name("no_such_identity").has_value());
}

TEST_CASE("theta classification") {
    const ThetaReport r = theta_v_suite(200);
    CHECK(r.pass);
    CHECK(theta_v_expected(18) == 3);
    CHECK(theta_v_expected(12) == 1);
    CHECK(theta_v_expected(8) == 2);
}

TEST_CASE("ring properties on pseudo-random polynomials") {
    for (long i = 1; i < 25; ++i) {
        const UPoly a = u_poly(i) + UPoly::constant(Rational::make(i, 3));
        const UPoly b = v_poly(i + 2) * Rational(i % 5 - 2);
        const UPoly c = UPoly::parse("X^2 - 7/2");
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            const auto [q, r] = divrem(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
        CHECK(compose(compose(a, c), UPoly::x()) == compose(a, c));
    }
}
