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

#include "reflektor/refl.hpp"
#include "reflektor/words.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace reflektor;

namespace {
CycloElem in(const ReflectionRep& rep, const std::string& name) { return named_constant(name).lift(rep.field()); }
}

TEST_CASE("generators are reflections") {
    for (const auto& name : preset_names()) {
        const ReflectionRep rep = preset(name);
        CHECK(rep.generators.size() == static_cast<std::size_t>(rep.rank()));
        for (const auto& g : rep.generators) {
            CHECK_MESSAGE((g * g).is_identity(), name);
            CHECK_MESSAGE(g.is_reflection(), name);
            CHECK(g.det() == rep.scalar(-1));
        }
    }
}

TEST_CASE("conductors") {
    CHECK(preset("h3_coxeter").conductor() == 5);
    CHECK(preset("g24_334").conductor() == 7);
    CHECK(preset("g27_a").conductor() == 15);
    CHECK(preset("fold_a3").conductor() == 1);
}

TEST_CASE("delta and theta") {
    const ReflectionRep h3 = preset("h3_coxeter");
    CHECK(delta(h3) == (h3.scalar(3) - in(h3, "tau")) * Rational(2));
    CHECK(delta(preset("g24_334")).is_one());
    CHECK(delta(preset("g24_443")).is_one());
    CHECK(delta(preset("g24_444")).is_one());
    CHECK(delta(preset("g27_b")).is_one());
    const ReflectionRep g24 = preset("g24_334");
    const auto [th, thp] = theta_pair(g24);
    CHECK(thp - th == delta(g24));
    CHECK(th == g24.spec.coeffs[1][2]);
}

TEST_CASE("pairings from words") {
    const ReflectionRep h3 = preset("h3_552");
    const auto& s = h3.generators;
    CHECK(pair_C_field(s[1], conjugate(s[2], s[0])).is_one());
    const ReflectionRep g27 = preset("g27_a");
    const auto& t = g27.generators;
    CHECK(pair_C_field(t[0], conjugate(t[1], t[2])) == g27.scalar(2));
    CHECK(pair_C_field(s[0], s[1]) == h3.spec.pairing(0, 1));
    CHECK_THROWS(pair_C_field(s[0] * s[1], s[2]));
}

TEST_CASE("pairing classes") {
    const FieldCtx& f = field_ctx(5);
    CHECK(classify_pairing(CycloElem(f, Rational(0))).order == 2);
    CHECK(classify_pairing(CycloElem(f, Rational(1))).order == 3);
    CHECK(classify_pairing(CycloElem(f, Rational(2))).order == 4);
    CHECK(classify_pairing(named_constant("tau")).order == 5);
    CHECK(classify_pairing(CycloElem(f, Rational(4))).affine);
    CHECK_FALSE(classify_pairing(CycloElem(f, Rational(5))).order.has_value());
}

TEST_CASE("words") {
    const ReflectionRep rep = preset("h3_coxeter");
    const auto& s = rep.generators;
    CHECK(word_element(rep, {}).is_identity());
    CHECK(word_element(rep, {1, 2, 3}) == s[0] * s[1] * s[2]);
    CHECK(eval_word(rep, "s1 s2 s3") == s[0] * s[1] * s[2]);
    CHECK(eval_word(rep, "1").is_identity());
    CHECK(eval_word(rep, "s2^{s1}") == s[0] * s[1] * s[0]);
    CHECK(eval_word(rep, "(s1 s2)^-1") == s[1] * s[0]);
    const auto ord = classify_pairing(rep.spec.pairing(0, 1)).order;
    REQUIRE(ord.has_value());
    CHECK(eval_word(rep, "(s1 s2)^" + std::to_string(*ord)).is_identity());
    CHECK_FALSE(eval_word(rep, "(s1 s2)^" + std::to_string(*ord - 1)).is_identity());
    CHECK_THROWS(eval_word(rep, "s9"));
    CHECK_THROWS(eval_word(rep, "s0"));
    CHECK_THROWS(eval_word(rep, "(s1"));
    const auto [lhs, rhs] = split_equation("s1 s2 = s2 s1");
    CHECK(lhs == "s1 s2");
    CHECK(rhs == "s2 s1");
    CHECK(split_equation("s1^2").second == "1");
}

TEST_CASE("affine presets") {
    const ReflectionRep a = preset("atilde:3");
    CHECK(a.circuit);
    const FieldMatrix s0 = s0_element(a);
    CHECK(s0.is_reflection());
    const CycloElem l = a.spec.coeffs[2][0], m = a.spec.coeffs[0][2];
    const CycloElem one = a.scalar(1);
    CHECK(pair_C_field(s0, a.generators[2]) == (l + one) * (m + one));
}

TEST_CASE("preset errors") {
    CHECK_THROWS(preset("no_such"));
    CHECK_THROWS(preset("gppn:1:3"));
    CHECK_THROWS(preset("gppn:x:3"));
    CHECK_THROWS(s0_element(preset("h3_coxeter")));
}

TEST_CASE("catalog json") {
    const auto j = nlohmann::json::parse(catalog_json());
    CHECK(j.at("format") == 1);
    CHECK(j.at("presets").size() >= preset_names().size());
    for (const auto& p : j.at("presets")) {
        const ReflectionRep rep = preset(p.at("name").get<std::string>());
        CHECK(p.at("rank") == rep.rank());
        CHECK(p.at("conductor") == rep.conductor());
    }
}

TEST_CASE("generator construction over rationals") {
    const std::vector<std::vector<Rational>> k{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    const auto g = build_generators(k, Rational(1));
    for (const auto& s : g) CHECK((s * s).is_identity());
    CHECK((g[0] * g[1]).pow(3).is_identity());
    CHECK((g[0] * g[2]).pow(2).is_identity());
}
