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

#include "reflektor/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using reflektor::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational::make(2, 4) == Rational::make(1, 2));
    CHECK(Rational::make(-3, -6).to_string() == "1/2");
    const Rational z = Rational::make(0, 7);
    CHECK(z.num() == 0);
    CHECK(z.den() == 1);
    CHECK(Rational::make(3, -9).to_string() == "-1/3");
    CHECK_THROWS_AS(Rational::make(1, 0), std::domain_error);
}

TEST_CASE("arithmetic examples") {
    CHECK(Rational::make(1, 2) + Rational::make(1, 3) == Rational::make(5, 6));
    CHECK(Rational(2) * Rational::make(3, 2) == Rational(3));
    CHECK(Rational::make(1, 2) / Rational::make(1, 2) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational::make(2, 3).pow(-2) == Rational::make(9, 4));
}

TEST_CASE("parse and print round trip") {
    for (const char* s : {"0", "7", "-7", "22/7", "-1/3"}) CHECK(Rational::parse(s).to_string() == s);
    CHECK(Rational::parse("4/6") == Rational::make(2, 3));
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(20251);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    auto draw = [&] { return Rational::make(num(rng), den(rng)); };
    for (int i = 0; i < 500; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a.den() > 0);
        CHECK(gcd(a.num(), a.den()) == 1);
        if (a == b) CHECK(a.hash() == b.hash());
    }
}
