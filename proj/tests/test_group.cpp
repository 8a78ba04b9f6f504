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

#include "reflektor/group.hpp"
#include "reflektor/refl.hpp"
#include "reflektor/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <omp.h>

using namespace reflektor;

namespace {
ClosureOptions capped(std::size_t cap, bool store = false) {
    ClosureOptions o;
    o.cap = cap;
    o.store_elements = store;
    return o;
}
}  // namespace

TEST_CASE("closure orders") {
    CHECK(closure(preset("fold_a3").generators).order == 24);
    CHECK(closure(preset("fold_b3").generators).order == 48);
    CHECK(closure(preset("h3_coxeter").generators).order == 120);
    CHECK(closure(preset("g24_334").generators).order == 336);
    CHECK(closure(preset("gppn:3:3").generators).order == 54);
    const ClosureResult inf = closure(preset("fold_g2_affine").generators, capped(10000));
    CHECK(inf.cap_exceeded);
    CHECK_FALSE(inf.complete());
    CHECK_THROWS(closure({}, {}));
}

TEST_CASE("monomial model") {
    CHECK(monomial_closure_order(2, 3) == 24);
    CHECK(monomial_closure_order(3, 3) == 54);
    CHECK(monomial_closure_order(4, 3) == 96);
    CHECK(monomial_closure_order(2, 4) == 192);
    CHECK(monomial_closure_order(3, 4) == 648);
}

TEST_CASE("element orders") {
    const ReflectionRep g24 = preset("g24_334");
    const FieldMatrix t = eval_word(g24, "s1 s2 s3");
    CHECK(element_order(t) == 14);
    const auto lam = scalar_power_check(t, 7);
    REQUIRE(lam.has_value());
    CHECK(*lam == g24.scalar(-1));
    CHECK_FALSE(scalar_power_check(t, 3).has_value());
    CHECK(element_order(g24.identity()) == 1);
    CHECK(element_order(g24.generators[0]) == 2);
    CHECK_FALSE(element_order(eval_word(preset("fold_g2_affine"), "s1 s2 s3"), 500).has_value());
}

TEST_CASE("unipotence") {
    const ReflectionRep rep = preset("h3_coxeter");
    CHECK(is_unipotent(rep.identity()));
    for (const auto& g : rep.generators) CHECK_FALSE(is_unipotent(g));
    const ReflectionRep a = preset("atilde:3");
    const FieldMatrix u = a.generators[0] * a.generators[1];
    if (classify_pairing(a.spec.pairing(0, 1)).affine) CHECK(is_unipotent(u));
}

TEST_CASE("relations") {
    const ReflectionRep g24 = preset("g24_334");
    CHECK(check_relation(g24, "s2^{s1} s3", 4));
    CHECK(check_relation(g24, "s1", 2));
    CHECK_FALSE(check_relation(g24, "s1 s2 s3", 7));
    CHECK(check_equation(g24, "(s1 s2 s3)^7 = (s1 s2 s3)^-7"));
    CHECK(check_equation(preset("h3_coxeter"), "s1 s3 = s3 s1") == check_relation(preset("h3_coxeter"), "s1 s3", 2));
}

TEST_CASE("centers") {
    const ReflectionRep h3 = preset("h3_coxeter");
    CHECK(center_order(closure(h3.generators, capped(1000, true)), h3.generators) == 2);
    const ReflectionRep d3 = preset("gppn:2:3");
    CHECK(center_order(closure(d3.generators, capped(1000, true)), d3.generators) == 1);
    const ClosureResult incomplete = closure(h3.generators, capped(10, true));
    CHECK_THROWS(center_order(incomplete, h3.generators));
}

TEST_CASE("serial and parallel closures agree") {
    for (const char* name : {"fold_b3", "h3_553a", "g24_443", "gnn3:4:1"}) {
        const ReflectionRep rep = preset(name);
        for (int threads : {1, 2, 4}) {
            omp_set_num_threads(threads);
            const ClosureResult a = closure_serial(rep.generators);
            const ClosureResult b = closure_parallel(rep.generators);
            CHECK_MESSAGE(a.order == b.order, name);
            CHECK_MESSAGE(a.element_keys == b.element_keys, name);
        }
    }
    omp_set_num_threads(1);
    const ReflectionRep big = preset("fold_g2_affine");
    CHECK(closure_serial(big.generators, capped(3000)).cap_exceeded == closure_parallel(big.generators, capped(3000)).cap_exceeded);
}

TEST_CASE("closure ignores generator order") {
    for (const char* name : {"h3_335", "g24_444", "fold_b3"}) {
        auto gens = preset(name).generators;
        const ClosureResult base = closure(gens);
        std::sort(gens.begin(), gens.end(), [](const FieldMatrix& x, const FieldMatrix& y) { return x.key() < y.key(); });
        do {
            const ClosureResult r = closure(gens);
            CHECK_MESSAGE(r.order == base.order, name);
            CHECK(r.element_keys == base.element_keys);
        } while (std::next_permutation(gens.begin(), gens.end(), [](const FieldMatrix& x, const FieldMatrix& y) { return x.key() < y.key(); }));
    }
}

TEST_CASE("closure is closed under products") {
    const ReflectionRep rep = preset("h3_552");
    const ClosureResult r = closure(rep.generators, capped(1000, true));
    REQUIRE(r.elements.size() == r.order);
    for (std::size_t i = 0; i < r.elements.size(); i += 7)
        for (const auto& g : rep.generators) CHECK(r.element_keys.count((r.elements[i] * g).key()) == 1);
}
