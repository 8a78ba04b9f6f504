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

#include "reflektor/suites.hpp"

#include "reflektor/field_suites.hpp"
#include "reflektor/group.hpp"
#include "reflektor/identities.hpp"
#include "reflektor/symbolic.hpp"
#include "reflektor/words.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace reflektor {
namespace {

using Clock = std::chrono::steady_clock;

std::string str(long v) { return std::to_string(v); }

CycloElem in_field(const ReflectionRep& rep, const std::string& name) { return named_constant(name).lift(rep.field()); }

/// Involutions of determinant -1, row structure and pairwise orders (0 = infinite).
void rep_basics(SuiteReport& rep, const std::string& id, const ReflectionRep& r,
                const std::optional<std::array<long, 3>>& orders = std::nullopt) {
    bool refl = true, rows = true;
    const FieldMatrix I = r.identity();
    for (int i = 0; i < r.rank(); ++i) {
        const FieldMatrix& g = r.generators[static_cast<std::size_t>(i)];
        refl = refl && g.is_reflection() && g.det() == r.scalar(-1);
        for (int a = 0; a < r.rank(); ++a)
            for (int b = 0; b < r.rank(); ++b)
                if (a != i) rows = rows && g(a, b) == I(a, b);
    }
    rep.check(id + ".reflections", refl && rows);
    if (r.rank() != 3 || !orders) return;
    const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
    std::string detail;
    bool ok = true;
    for (std::size_t p = 0; p < 3; ++p) {
        auto o = element_order(word_element(r, {pairs[p].first, pairs[p].second}), 200);
        const long got = o ? *o : 0;
        detail += (p ? "," : "") + str(got);
        ok = ok && got == (*orders)[p];
    }
    rep.check(id + ".pair_orders", ok, "(" + detail + ")");
}

ClosureResult close(const ReflectionRep& r, std::size_t cap, bool store) {
    ClosureOptions o;
    o.cap = cap;
    o.store_elements = store;
    return closure(r.generators, o);
}

void order_case(SuiteReport& rep, const std::string& id, const ClosureResult& c, std::size_t want) {
    rep.check(id, c.complete() && c.order == want, c.cap_exceeded ? "cap exceeded" : "order " + str(static_cast<long>(c.order)));
}

bool relation_holds(const ReflectionRep& r, const std::string& rel) {
    return check_equation(r, rel);
}

/// Smallest k <= 60 with t^k scalar, as text.
std::string first_scalar_power(const FieldMatrix& t) {
    FieldMatrix p = t;
    for (long k = 1; k <= 60; ++k, p = p * t) {
        CycloElem lam;
        if (p.is_scalar(&lam)) return "t^" + str(k) + " = (" + lam.to_string() + ")I";
    }
    return "no scalar power <= 60";
}

std::string unipotent_witness(const ReflectionRep& r) {
    std::vector<std::pair<std::string, FieldMatrix>> refl;
    const int n = r.rank();
    for (int i = 1; i <= n; ++i) {
        refl.emplace_back("s" + str(i), r.generators[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            refl.emplace_back("s" + str(i) + "^{s" + str(j) + "}", eval_word(r, "s" + str(i) + "^{s" + str(j) + "}"));
            for (int k = 1; k <= n; ++k)
                if (k != j) {
                    const std::string w = "s" + str(i) + "^{s" + str(j) + " s" + str(k) + "}";
                    refl.emplace_back(w, eval_word(r, w));
                }
        }
    }
    for (const auto& [a, x] : refl)
        for (const auto& [b, y] : refl) {
            const FieldMatrix p = x * y;
            if (!p.is_identity() && is_unipotent(p)) return a + " " + b;
        }
    return {};
}

}  // namespace

// ---------------------------------------------------------------- polynomial suites

SuiteReport identity_catalog_suite(long cap_bound) {
    SuiteReport rep("identities");
    for (const IdentitySpec& s : identity_catalog()) {
        const long b = std::min(s.default_bound, cap_bound);
        const IdentityReport r = check_identity(s.tag, -b, b);
        std::string detail = str(r.checked) + " tuples, |n| <= " + str(b);
        if (!r.failures.empty()) {
            detail += ", first failure:";
            for (long v : r.failures.front()) detail += " " + str(v);
        }
        rep.check("identity." + s.name, r.pass && r.checked > 0, detail);
    }
    return rep;
}

SuiteReport factorization_suite(long n_max) {
    SuiteReport rep("factorization");
    bool prod = true, monic = true;
    long bad = 0;
    for (long n = 3; n <= n_max; ++n) {
        UPoly p{1};
        for (long d : divisors(n)) p = p * v_poly(d);
        if (p != u_poly(n) && !bad) bad = n;
        prod = prod && p == u_poly(n);
        const UPoly& v = v_poly(n);
        bool integral = v.is_monic();
        for (int i = 0; i <= v.degree(); ++i) integral = integral && v.coeff(i).is_integer();
        monic = monic && integral && v.degree() == euler_phi(n) / 2;
    }
    rep.check("factor.product", prod, "3 <= n <= " + str(n_max) + (bad ? ", first failure n=" + str(bad) : ""));
    rep.check("factor.integral_monic", monic);
    return rep;
}

SuiteReport theta_suite(long n_max) {
    SuiteReport rep("theta");
    const ThetaReport r = theta_v_suite(n_max);
    std::string detail = str(r.checked) + " values of n";
    if (!r.mismatches.empty()) detail += ", first mismatch n=" + str(r.mismatches.front());
    rep.check("theta.product_of_roots", r.pass, detail);
    return rep;
}

SuiteReport symbolic_suite() {
    SuiteReport rep("symbolic");
    rep.merge(verify_power_formulas(-8, 8));
    rep.merge(verify_reflection_formulas(-8, 8));
    rep.merge(verify_C_catalog(-8, 8));
    rep.merge(verify_half_turn_catalog());
    rep.merge(verify_charpoly_catalog(-8, 8));
    return rep;
}

// ---------------------------------------------------------------- real groups

SuiteReport h3_suite() {
    struct Claim {
        const char* name;
        std::array<long, 3> orders;
        long t_half;
        bool delta_two;
        std::vector<std::string> relations;
    };
    const std::vector<Claim> claims{
        {"h3_coxeter", {3, 5, 2}, 5, false, {}},
        {"h3_552", {5, 5, 2}, 3, true, {"(s2 s3^{s1})^3"}},
        {"h3_335", {3, 3, 5}, 3, true, {"(s1 s2^{s3 s2})^2"}},
        {"h3_553a", {5, 5, 3}, 5, false, {"(s1 s2^{s3})^2"}},
        {"h3_553b", {5, 5, 3}, 3, true, {"(s3 s2^{s1})^2"}},
        {"h3_555", {5, 5, 5}, 5, false, {"(s1 s2^{s3})^3", "(s1 s2^{s3 s2})^2"}},
    };
    SuiteReport rep("h3");
    for (const Claim& c : claims) {
        const ReflectionRep r = preset(c.name);
        const std::string id = std::string("h3.") + c.name;
        rep_basics(rep, id, r, c.orders);
        const ClosureResult cl = close(r, 10000, true);
        order_case(rep, id + ".order", cl, 120);
        if (cl.complete()) rep.check(id + ".center", center_order(cl, r.generators) == 2);
        const FieldMatrix t = eval_word(r, "s1 s2 s3");
        const auto lam = scalar_power_check(t, c.t_half);
        rep.check(id + ".t_power", lam && *lam == r.scalar(-1), first_scalar_power(t));
        const CycloElem tau = in_field(r, "tau");
        const CycloElem want = c.delta_two ? r.scalar(2) : (r.scalar(3) - tau) * Rational(2);
        rep.check(id + ".delta", delta(r) == want, delta(r).to_string());
        for (const auto& rel : c.relations) rep.check(id + ".relation " + rel, relation_holds(r, rel));
    }
    {
        const ReflectionRep r = preset("h3_552");
        const CycloElem C = pair_C_field(r.generators[1], eval_word(r, "s3^{s1}"));
        const PairingClass pc = classify_pairing(C);
        rep.check("h3.h3_552.pairing", C == r.scalar(1) && pc.order == 3L, pc.text);
    }
    return rep;
}

SuiteReport coxeter_folds_suite() {
    SuiteReport rep("coxeter_folds");
    struct Fold {
        const char* name;
        std::array<long, 3> orders;
        std::string fold_relation;
        std::size_t order;
    };
    const std::vector<Fold> folds{
        {"fold_a3", {3, 3, 3}, "(s1 s2 s3 s2)^2", 24},
        {"fold_b3", {4, 4, 3}, "(s1 s2 s3 s2)^2", 48},
        {"h3_335", {3, 3, 5}, "(s1 (s2 s3)^2 s2)^2", 120},
        {"h3_553a", {5, 5, 3}, "(s1 s2 s3 s2)^2", 120},
    };
    for (const Fold& f : folds) {
        const ReflectionRep r = preset(f.name);
        const std::string id = std::string("coxeter_folds.") + f.name;
        rep_basics(rep, id, r, f.orders);
        rep.check(id + ".fold_relation", relation_holds(r, f.fold_relation));
        order_case(rep, id + ".order", close(r, 10000, false), f.order);
    }
    for (const char* name : {"fold_g2_affine", "fold_g2_folded"}) {
        const ReflectionRep r = preset(name);
        const std::string id = std::string("coxeter_folds.") + name;
        const ClosureResult c = close(r, 10000, false);
        rep.check(id + ".unbounded", c.cap_exceeded, "cap 10000");
        const std::string w = unipotent_witness(r);
        rep.check(id + ".unipotent_witness", !w.empty(), w);
    }
    {
        const ReflectionRep r = preset("fold_b3_even_r");
        rep.check("coxeter_folds.fold_b3_even_r.unbounded", close(r, 10000, false).cap_exceeded,
                  "parameters (2,2,2;-1) have r even and no finite quotient");
    }
    return rep;
}

SuiteReport folding_suite() {
    SuiteReport rep("folding");
    const std::array<std::pair<long, long>, 3> cases{{{5, 3}, {3, 5}, {4, 3}}};
    const std::array<std::size_t, 3> targets{120, 120, 48};
    for (std::size_t c = 0; c < cases.size(); ++c) {
        const auto [p, r] = cases[c];
        const long r1 = (r - 1) / 2;
        for (long k = 1; 2 * k < r; ++k) {
            if (gcd_l(k, r) != 1) continue;
            const std::string name = "wppr:" + str(p) + ":" + str(r) + ":" + str(k);
            const std::string id = "folding." + name;
            const ReflectionRep rp = preset(name);
            rep_basics(rep, id, rp, std::array<long, 3>{p, p, r});

            const long k1 = k / 2;
            const long eps_rule = k % 2 ? -1 : 1;
            const long kp = k % 2 ? r1 - k1 : k1;
            const CycloElem l = rp.spec.coeffs[1][2];
            const CycloElem s = sqrt_root(r, k).lift(rp.field());
            rep.check(id + ".sign", l == s * Rational(eps_rule), "k' = " + str(kp));

            std::string rel = "(s1 (s2 s3)^" + str(r1) + " s2)^2";
            rep.check(id + ".relation", relation_holds(rp, rel));

            const FieldMatrix s3p = eval_word(rp, "(s2 s3)^" + str(r1) + " s2");
            const CycloElem C = pair_C_field(rp.generators[1], s3p);
            const CycloElem want = root_of_v(r, kp).lift(rp.field());
            rep.check(id + ".pairing", C == rp.scalar(2) + l && C == want, classify_pairing(C).text);

            const ClosureResult g = close(rp, 10000, false);
            order_case(rep, id + ".order", g, targets[c]);
            const ClosureResult g2 = closure({rp.generators[0], rp.generators[1], s3p}, {10000, false});
            rep.check(id + ".same_group", g2.complete() && g2.element_keys == g.element_keys);

            const CycloElem al = root_of_v(p, 1);
            const ReflectionRep target = build_rep(DiagramSpec::rank3(al, root_of_v(r, kp), CycloElem(al.ctx()), CycloElem(al.ctx())), "target");
            const ClosureResult tg = close(target, 10000, false);
            rep.check(id + ".target_order", tg.complete() && tg.order == g.order, "target " + str(static_cast<long>(tg.order)));
        }
    }
    return rep;
}

SuiteReport h4_suite() {
    SuiteReport rep("h4");
    const ReflectionRep geo = preset("h4_geometric");
    const ClosureResult oracle = close(geo, 20000, false);
    order_case(rep, "h4.geometric.order", oracle, 14400);
    const std::vector<std::pair<std::string, std::string>> presets{
        {"h4_1", ""}, {"h4_2", "(s2 s4^{s3})^3"}, {"h4_3", "(s4^{s3} s2)^2"}, {"h4_4", "(s3^{s4} s2)^2"}, {"h4_5", "(s3^{s4 s3} s2)^2"}};
    for (const auto& [name, rel] : presets) {
        const ReflectionRep r = preset(name);
        const std::string id = "h4." + name;
        rep_basics(rep, id, r);
        if (!rel.empty()) rep.check(id + ".relation " + rel, relation_holds(r, rel));
        const ClosureResult c = close(r, 20000, false);
        rep.check(id + ".order", c.complete() && c.order == 14400 && c.order == oracle.order,
                  c.cap_exceeded ? "cap exceeded" : "order " + str(static_cast<long>(c.order)));
    }
    return rep;
}

// ---------------------------------------------------------------- complex groups

SuiteReport affine_suite() {
    SuiteReport rep("affine");
    const std::vector<std::pair<long, int>> cases{{2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}};
    for (const auto& [p, n] : cases) {
        const std::string name = "gppn:" + str(p) + ":" + str(n);
        const std::string id = "affine." + name;
        const ReflectionRep r = preset(name);
        rep_basics(rep, id, r);
        const CycloElem l = r.spec.coeffs[0][static_cast<std::size_t>(n - 1)];
        const CycloElem m = r.spec.coeffs[static_cast<std::size_t>(n - 1)][0];
        const CycloElem sum = l + m + r.scalar(2);
        const bool sum_ok = p == 2 ? sum.is_zero() : sum == root_of_v(p, 1).lift(r.field());
        rep.check(id + ".constants", l * m == r.scalar(1) && sum_ok);

        const FieldMatrix s0 = s0_element(r);
        const CycloElem C = pair_C_field(s0, r.generators[static_cast<std::size_t>(n - 1)]);
        const PairingClass pc = classify_pairing(C);
        rep.check(id + ".s0_pairing", C == (l + r.scalar(1)) * (m + r.scalar(1)) && pc.order == p, pc.text);

        const std::string rel = "(s0^{s" + str(n - 1) + "} s" + str(n) + ")^3";
        rep.check(id + ".relation " + rel, relation_holds(r, rel));

        long expect = 1;
        for (int i = 0; i < n - 1; ++i) expect *= p;
        for (int i = 2; i <= n; ++i) expect *= i;
        const std::size_t mono = monomial_closure_order(p, n);
        const ClosureResult c = close(r, 10000, p == 2);
        rep.check(id + ".order", c.complete() && c.order == static_cast<std::size_t>(expect) && mono == c.order,
                  "order " + str(static_cast<long>(c.order)) + ", monomial model " + str(static_cast<long>(mono)));
        if (p == 2 && c.complete()) {
            const std::size_t z = center_order(c, r.generators);
            rep.check(id + ".type_D_center", z == static_cast<std::size_t>(n % 2 ? 1 : 2), "center " + str(static_cast<long>(z)));
        }
    }
    for (int n : {3, 4}) {
        const std::string name = "atilde:" + str(n);
        const std::string id = "affine." + name;
        const ReflectionRep r = preset(name);
        const FieldMatrix s0 = s0_element(r);
        const FieldMatrix& sn = r.generators[static_cast<std::size_t>(n - 1)];
        rep.check(id + ".s0_pairing", pair_C_field(s0, sn) == r.scalar(4));
        const FieldMatrix u = s0 * sn;
        rep.check(id + ".unipotent", is_unipotent(u) && !u.is_identity());
        rep.check(id + ".unbounded", close(r, 10000, false).cap_exceeded, "cap 10000");
    }
    return rep;
}

SuiteReport gnn3_suite() {
    SuiteReport rep("gnn3");
    {
        // alpha = beta = 1: every entry of (s1s2s3)^2 - (s2s3s1)^2 is divisible by lm + l + m
        const MPoly l = MPoly::var(Var::l), m = MPoly::var(Var::m), one(1);
        const std::vector<std::vector<MPoly>> k{{MPoly(-2), one, one}, {one, MPoly(-2), l}, {one, m, MPoly(-2)}};
        const auto g = build_generators(k, one);
        const SymMatrix a = g[0] * g[1] * g[2], b = g[1] * g[2] * g[0];
        const SymMatrix d = a * a - b * b;
        bool div = !d.is_identity();
        for (const MPoly& e : d.entries()) div = div && divisible_by_linear(e, Var::m, l + one, l);
        rep.check("gnn3.symbolic_divisibility", div);
    }
    for (long n = 2; n <= 6; ++n) {
        std::vector<long> ks;
        for (long k = 1; 2 * k <= n; ++k)
            if (gcd_l(k, n) == 1) ks.push_back(k);
        for (long k : ks) {
            const std::string name = "gnn3:" + str(n) + ":" + str(k);
            const std::string id = "gnn3." + name;
            const ReflectionRep r = preset(name);
            rep_basics(rep, id, r, std::array<long, 3>{3, 3, n});
            const CycloElem l = r.spec.coeffs[1][2], m = r.spec.coeffs[2][1], g = l * m;
            rep.check(id + ".sum_condition", l + m == -g);
            rep.check(id + ".relation", relation_holds(r, "(s1 s2 s3)^2 = (s2 s3 s1)^2"));
            rep.check(id + ".delta", delta(r) == r.scalar(4) - g);
            rep.check(id + ".t_power", check_relation(r, "s1 s2 s3", 2 * n));
            order_case(rep, id + ".order", close(r, 10000, false), static_cast<std::size_t>(6 * n * n));
            if (n >= 3) {
                const CycloElem s = sqrt_root(n, k);
                const CycloElem one(s.ctx(), Rational(1));
                const ReflectionRep other = build_rep(DiagramSpec::rank3(one, one, s, s), "symmetric");
                const CycloElem go = s * s;
                rep.check(id + ".converse", s + s != -go && !relation_holds(other, "(s1 s2 s3)^2 = (s2 s3 s1)^2"));
            }
        }
    }
    return rep;
}

SuiteReport g24_suite() {
    SuiteReport rep("g24");
    struct Claim {
        const char* name;
        std::array<long, 3> orders;
        std::string relation;
        long q1, q0;
        bool doubled;
    };
    const std::vector<Claim> claims{
        {"g24_334", {3, 3, 4}, "(s2^{s1} s3)^4", 1, 2, false},
        {"g24_443", {4, 4, 3}, "(s2 s1^{s3})^3", 3, 4, true},
        {"g24_444", {4, 4, 4}, "(s1 s2^{s3})^3", 5, 8, true},
    };
    for (const Claim& c : claims) {
        const ReflectionRep r = preset(c.name);
        const std::string id = std::string("g24.") + c.name;
        rep_basics(rep, id, r, c.orders);
        const ClosureResult cl = close(r, 10000, true);
        order_case(rep, id + ".order", cl, 336);
        const FieldMatrix t = eval_word(r, "s1 s2 s3");
        const auto ord = element_order(t, 100);
        const auto lam = scalar_power_check(t, 7);
        rep.check(id + ".t_power", ord == 14L && lam && *lam == r.scalar(-1), first_scalar_power(t));
        rep.check(id + ".delta", delta(r) == r.scalar(1), delta(r).to_string());
        CycloElem x = r.spec.coeffs[1][2];
        if (c.doubled) x = x * Rational(2);
        rep.check(id + ".quadratic", (x * x + x * Rational(c.q1) + r.scalar(c.q0)).is_zero(),
                  "X^2 + " + str(c.q1) + "X + " + str(c.q0));
        rep.check(id + ".relation " + c.relation, relation_holds(r, c.relation));
        if (cl.complete()) {
            bool divides = true;
            for (std::size_t i = 0; i < cl.elements.size(); i += 37) {
                const auto o = element_order(cl.elements[i], 400);
                divides = divides && o && cl.order % static_cast<std::size_t>(*o) == 0;
            }
            rep.check(id + ".element_orders_divide", divides);
        }
    }
    {
        const ReflectionRep r = preset("g24_334");
        const CycloElem z = in_field(r, "zeta7_half");
        const CycloElem l = r.spec.coeffs[1][2], m = r.spec.coeffs[2][1];
        const auto [th, thp] = theta_pair(r);
        rep.check("g24.g24_334.constants", l == -z && m == r.scalar(-1) + z);
        rep.check("g24.g24_334.theta", th == l && thp == -m && thp == z.conj() && thp == -th.conj());
        const auto cp = eval_word(r, "s1 s2 s3").charpoly();
        rep.check("g24.g24_334.charpoly", cp[0] == r.scalar(1) && cp[1] == -z && cp[2] == -z.conj() && cp[3] == r.scalar(1));

        std::vector<FieldMatrix> rev(r.generators.rbegin(), r.generators.rend());
        const ClosureResult a = close(r, 10000, false), b = closure(rev, {10000, false});
        rep.check("g24.g24_334.generator_order_independent", a.element_keys == b.element_keys);

        DiagramSpec conj = r.spec;
        for (auto& row : conj.coeffs)
            for (auto& e : row) e = e.conj();
        order_case(rep, "g24.g24_334.galois_conjugate_order", close(build_rep(conj, "conj"), 10000, false), 336);
    }
    {
        // alpha = beta = 2: Delta + C - 2 as polynomials in l, m
        const MPoly l = MPoly::var(Var::l), m = MPoly::var(Var::m), one(1), two(2);
        const std::vector<std::vector<MPoly>> k{{MPoly(-2), two, two}, {one, MPoly(-2), l}, {one, m, MPoly(-2)}};
        const auto g = build_generators(k, one);
        const MPoly dlt = MPoly(8) - MPoly(2) * (two + two + l * m) - (two * l + two * m);
        const MPoly c1 = pair_C(g[1], g[2] * g[0] * g[2]);
        const MPoly c2 = pair_C(g[0], g[2] * g[1] * g[2]);
        rep.check("g24.elimination.order4_forces_degenerate", dlt + c1 - two == MPoly(0), "Delta + C(s2, s1^s3) - 2 = 0");
        rep.check("g24.elimination.order4_forces_degenerate_alt", dlt + c2 - two == MPoly(0), "Delta + C(s1, s2^s3) - 2 = 0");
    }
    return rep;
}

SuiteReport g27_suite() {
    SuiteReport rep("g27");
    struct Claim {
        char tag;
        std::array<long, 3> orders;
        std::vector<std::string> relations;
        long t_exp;
        int t_root;   // scalar is sign * omega^t_root
        long t_sign;
        std::function<CycloElem(const CycloElem&, const CycloElem&)> delta_of;  // (tau, one)
        const char* delta_text;
    };
    auto three_minus = [](const CycloElem& t, const CycloElem& one) { return one * Rational(3) - t; };
    const std::vector<Claim> claims{
        {'a', {3, 3, 5}, {"(s1 s2^{s3})^4"}, 5, 1, -1, three_minus, "3-tau"},
        {'b', {3, 4, 5}, {"(s1 s2^{s3})^4"}, 4, 1, 1, [](const CycloElem&, const CycloElem& o) { return o * Rational(3); }, "3"},
        {'c', {3, 4, 5}, {"(s1 s2^{s3})^5"}, 5, 1, -1, three_minus, "3-tau"},
        {'d', {5, 5, 3}, {"(s3 s2^{s1})^3", "(s1 s2^{s3})^4"}, 5, 1, -1, three_minus, "3-tau"},
        {'e', {5, 5, 4}, {"(s1 s2^{s3})^3", "(s1 s3^{s2})^3"}, 5, 1, -1, three_minus, "3-tau"},
        {'f', {4, 4, 5}, {"(s1 s2^{s3})^3"}, 4, 2, 1, [](const CycloElem&, const CycloElem& o) { return o; }, "1"},
        {'g', {3, 3, 4}, {"(s1 s2^{s3})^5"}, 5, 2, -1, [](const CycloElem& t, const CycloElem&) { return t; }, "tau"},
    };
    for (const Claim& c : claims) {
        const std::string name = std::string("g27_") + c.tag;
        const std::string id = "g27." + name;
        const ReflectionRep r = preset(name);
        const CycloElem tau = in_field(r, "tau"), w = in_field(r, "omega"), one = r.scalar(1);
        rep_basics(rep, id, r, c.orders);
        const ClosureResult cl = close(r, 10000, true);
        order_case(rep, id + ".order", cl, 2160);
        if (cl.complete()) rep.check(id + ".center", center_order(cl, r.generators) == 6);
        for (const auto& rel : c.relations) rep.check(id + ".relation " + rel, relation_holds(r, rel));

        const FieldMatrix t = eval_word(r, "s1 s2 s3");
        const CycloElem lam = w.pow(c.t_root) * Rational(c.t_sign);
        const auto got = scalar_power_check(t, c.t_exp);
        const long period = 3 * c.t_exp;
        const auto full = scalar_power_check(t, period);
        const CycloElem full_want = c.t_exp == 5 ? -one : one;
        rep.check(id + ".t_power", got && *got == lam && full && *full == full_want,
                  "claimed t^" + str(c.t_exp) + " = (" + lam.to_string() + ")I; computed " + first_scalar_power(t));
        const CycloElem want = c.delta_of(tau, one);
        const CycloElem d = delta(r);
        std::string dtext = d.to_string();
        if (d == one) dtext = "1";
        if (d == three_minus(tau, one)) dtext = "3-tau";
        if (d == tau) dtext = "tau";
        rep.check(id + ".delta", d == want, std::string("claimed ") + c.delta_text + ", computed " + dtext);
    }
    {
        const ReflectionRep r = preset("g27_a");
        const CycloElem w = in_field(r, "omega");
        const CycloElem C = pair_C_field(r.generators[0], eval_word(r, "s2^{s3}"));
        const PairingClass pc = classify_pairing(C);
        rep.check("g27.g27_a.pairing", C == r.scalar(2) && pc.order == 4L, pc.text);
        const std::string c = "(s1 s2)", d = "(s2 s3)";
        bool rel = check_relation(r, c, 3) && check_relation(r, d, 5) && check_relation(r, c + d, 3) &&
                   check_relation(r, c + "^2 " + d, 4);
        rep.check("g27.g27_a.burnside_relations", rel, "c^3 = d^5 = (cd)^3 = (c^2 d)^4 = 1");
        const FieldMatrix comm = eval_word(r, c + " " + d + "^3 " + c + "^-1 " + d + "^-3");
        const FieldMatrix t2 = eval_word(r, "s1 (s2 s3)^2");
        const FieldMatrix sq = comm * comm;
        bool central = true;
        for (const auto& g : r.generators) central = central && sq * g == g * sq;
        rep.check("g27.g27_a.commutator", element_order(comm, 100) == 6L && central && comm == t2 * t2);
        const auto t24 = scalar_power_check(t2, 4);
        rep.check("g27.g27_a.t2_power", t24 && *t24 == w * w && element_order(t2, 100) == 12L);

        DiagramSpec conj = r.spec;
        for (auto& row : conj.coeffs)
            for (auto& e : row) e = e.conj();
        order_case(rep, "g27.g27_a.galois_conjugate_order", close(build_rep(conj, "conj"), 10000, false), 2160);
    }
    rep.check("g27.g27_a_neg.unbounded", close(preset("g27_a_neg"), 10000, false).cap_exceeded,
              "l = omega(1-tau) gives no finite quotient");
    return rep;
}

// ---------------------------------------------------------------- registry

std::optional<Profile> profile_from_name(const std::string& name) {
    if (name == "quick") return Profile::quick;
    if (name == "full") return Profile::full;
    return std::nullopt;
}

namespace {

struct Entry {
    SuiteInfo info;
    std::function<SuiteReport(Profile)> run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r{
        {{"identities", "u-polynomial identities and the factorization into v-polynomials"},
         [](Profile p) {
             SuiteReport s = identity_catalog_suite(p == Profile::quick ? 20 : 1000);
             s.merge(factorization_suite(p == Profile::quick ? 60 : 200));
             return s;
         }},
        {{"roots", "identities at the roots of v_r, quadratic powers, root invariants"},
         [](Profile p) {
             const bool q = p == Profile::quick;
             SuiteReport s = root_identity_suite(q ? 20 : 30);
             s.merge(quad_power_suite(q ? 10 : 16));
             s.merge(root_invariant_suite(q ? 30 : 60));
             return s;
         }},
        {{"theta", "products of roots and unit certificates"},
         [](Profile p) {
             const bool q = p == Profile::quick;
             SuiteReport s = theta_suite(q ? 200 : 500);
             s.merge(norm_invertibility_suite(q ? 20 : 30));
             return s;
         }},
        {{"classification", "cyclotomic solutions of alpha beta = 4 gamma and alpha + beta + gamma = 4"},
         [](Profile) { return classification_suite(12); }},
        {{"matrices", "closed forms for generator-word powers and reflection words"},
         [](Profile) {
             SuiteReport s = verify_power_formulas(-8, 8);
             s.merge(verify_reflection_formulas(-8, 8));
             return s;
         }},
        {{"pairings", "pairing catalog for conjugated reflections"},
         [](Profile) {
             SuiteReport s = verify_C_catalog(-8, 8);
             s.merge(verify_half_turn_catalog());
             return s;
         }},
        {{"charpoly", "characteristic polynomials of Coxeter-type words"}, [](Profile) { return verify_charpoly_catalog(-8, 8); }},
        {{"folding", "rank-3 quotients W(p,p,r) -> W(p,r,2)"}, [](Profile) { return folding_suite(); }},
        {{"coxeter_folds", "folded presets A3, B3, H3 and the affine G2 case"}, [](Profile) { return coxeter_folds_suite(); }},
        {{"h3", "six presentations of W(H3)"}, [](Profile) { return h3_suite(); }},
        {{"h4", "five presentations of W(H4)"},
         [](Profile p) {
             if (p == Profile::quick) {
                 SuiteReport s("h4");
                 s.skip("h4.all", "group order 14400 exceeds the quick profile bound");
                 return s;
             }
             return h4_suite();
         }},
        {{"affine", "G(p,p,n) as quotients of affine A_{n-1}"}, [](Profile) { return affine_suite(); }},
        {{"gnn3", "G(n,n,3) presentations"}, [](Profile) { return gnn3_suite(); }},
        {{"g24", "G24 presentations"}, [](Profile) { return g24_suite(); }},
        {{"g27", "G27 presentations"}, [](Profile) { return g27_suite(); }},
    };
    return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

SuiteReport run_suite(const std::string& id, Profile profile) {
    for (const auto& e : registry()) {
        if (e.info.id != id) continue;
        const auto t0 = Clock::now();
        SuiteReport r = e.run(profile);
        r.suite = id;
        r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return r;
    }
    std::string msg = "unknown suite '" + id + "'; known:";
    for (const auto& e : registry()) msg += " " + e.info.id;
    throw std::invalid_argument(msg);
}

std::vector<SuiteReport> run_all(Profile profile) {
    std::vector<SuiteReport> out;
    for (const auto& e : registry()) out.push_back(run_suite(e.info.id, profile));
    return out;
}

}  // namespace reflektor
