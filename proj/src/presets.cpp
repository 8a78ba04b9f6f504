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

#include "reflektor/upoly.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace reflektor {
namespace {

struct Consts {
    const FieldCtx& f;
    explicit Consts(long n) : f(field_ctx(n)) {}
    CycloElem c(long v) const { return CycloElem(f, Rational(v)); }
    CycloElem q(long a, long b) const { return CycloElem(f, Rational::make(a, b)); }
    CycloElem named(const std::string& s) const { return named_constant(s).lift(f); }
    CycloElem z(long n, long k) const { return CycloElem::zeta(field_ctx(n), k).lift(f); }
};

/// R(alpha, beta, gamma; l) with m = gamma / l (both zero when gamma = 0).
ReflectionRep r3(const std::string& name, const CycloElem& a, const CycloElem& b, const CycloElem& g, const CycloElem& l) {
    const CycloElem m = g.is_zero() ? g : g / l;
    return build_rep(DiagramSpec::rank3(a, b, l, m), name);
}

ReflectionRep chain(const std::string& name, const FieldCtx& f, int rank, const std::vector<Edge>& edges) {
    return build_rep(DiagramSpec::from_edges(f, rank, edges), name);
}

ReflectionRep h4(const std::string& name, int which) {
    Consts k(5);
    const CycloElem one = k.c(1), t = k.named("tau");
    std::vector<Edge> e{{0, 1, one, one}, {1, 2, one, one}};
    switch (which) {
        case 1: e.push_back({2, 3, t, one}); break;
        case 2: e = {{0, 1, one, one}, {1, 2, t, one}, {2, 3, k.c(3) - t, one}}; break;
        case 3: e.push_back({1, 3, t, one}); e.push_back({2, 3, -t, -one}); break;
        case 4: e.push_back({1, 3, t, one}); e.push_back({2, 3, -one, t - k.c(3)}); break;
        case 5: e.push_back({1, 3, one, one}); e.push_back({2, 3, one - t, one - t}); break;
        default: {
            // symmetric geometric H4: k = 2cos(pi/5) = -(z^2 + z^3)
            const CycloElem c5 = -(k.z(5, 2) + k.z(5, 3));
            e = {{0, 1, one, one}, {1, 2, one, one}, {2, 3, c5, c5}};
        }
    }
    return chain(name, k.f, 4, e);
}

ReflectionRep g27(const std::string& name, char which) {
    Consts k(15);
    const CycloElem one = k.c(1), two = k.c(2), t = k.named("tau"), w = k.named("omega");
    switch (which) {
        case 'a': return r3(name, one, one, t, w * (t - one));
        case 'A': return r3(name, one, one, t, w * (one - t));
        case 'b': return r3(name, one, two, t, -w - t);
        case 'c': return r3(name, one, two, t, w * w + w * t);
        case 'd': return r3(name, t, k.c(3) - t, one, w * (k.c(3) - t));
        case 'e': return r3(name, t, t, two, w * (t - one) + w * w);
        case 'f': return r3(name, two, two, t, (w - t) * Rational::make(1, 2));
        default: return r3(name, one, one, two, w * (t - one) + w * w);
    }
}

using Builder = std::function<ReflectionRep(const std::string&)>;

const std::vector<std::pair<std::string, Builder>>& fixed_catalog() {
    static const std::vector<std::pair<std::string, Builder>> cat = [] {
        std::vector<std::pair<std::string, Builder>> v;
        auto h3 = [](int which) {
            return [which](const std::string& n) {
                Consts k(5);
                const CycloElem one = k.c(1), t = k.named("tau"), z = k.c(0), t3 = k.c(3) - t;
                switch (which) {
                    case 0: return r3(n, one, t, z, z);
                    case 1: return r3(n, t, t3, z, z);
                    case 2: return r3(n, one, one, t, one - t);
                    case 3: return r3(n, t, t, one, -one);
                    case 4: return r3(n, t, t3, one, -t3);
                    default: return r3(n, t, t, t, one - t);
                }
            };
        };
        v.emplace_back("h3_coxeter", h3(0));
        v.emplace_back("h3_552", h3(1));
        v.emplace_back("h3_335", h3(2));
        v.emplace_back("h3_553a", h3(3));
        v.emplace_back("h3_553b", h3(4));
        v.emplace_back("h3_555", h3(5));
        auto fold = [](long a, long g, long l) {
            return [=](const std::string& n) {
                Consts k(1);
                return r3(n, k.c(a), k.c(a), k.c(g), k.c(l));
            };
        };
        v.emplace_back("fold_a3", fold(1, 1, -1));
        v.emplace_back("fold_b3", fold(2, 1, -1));
        v.emplace_back("fold_b3_even_r", fold(2, 2, -1));
        v.emplace_back("fold_g2_affine", fold(3, 3, -1));
        v.emplace_back("fold_g2_folded", fold(3, 1, -1));
        for (int i = 1; i <= 5; ++i)
            v.emplace_back("h4_" + std::to_string(i), [i](const std::string& n) { return h4(n, i); });
        v.emplace_back("h4_geometric", [](const std::string& n) { return h4(n, 0); });
        auto g24 = [](int which) {
            return [which](const std::string& n) {
                Consts k(7);
                const CycloElem one = k.c(1), two = k.c(2), z = k.named("zeta7_half");
                switch (which) {
                    case 0: return r3(n, one, one, two, -z);
                    case 1: return r3(n, two, two, one, -one + z * Rational::make(1, 2));
                    default: return r3(n, two, two, two, -one - z * Rational::make(1, 2));
                }
            };
        };
        v.emplace_back("g24_334", g24(0));
        v.emplace_back("g24_443", g24(1));
        v.emplace_back("g24_444", g24(2));
        for (char c : std::string("abcdefg"))
            v.emplace_back(std::string("g27_") + c, [c](const std::string& n) { return g27(n, c); });
        v.emplace_back("g27_a_neg", [](const std::string& n) { return g27(n, 'A'); });
        return v;
    }();
    return cat;
}

std::vector<long> parse_args(const std::string& name, std::size_t count) {
    std::vector<long> out;
    std::stringstream ss(name);
    std::string part;
    std::getline(ss, part, ':');
    while (std::getline(ss, part, ':')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad preset argument in " + name);
        }
    }
    if (out.size() != count) throw std::invalid_argument("preset " + name + " expects " + std::to_string(count) + " arguments");
    return out;
}

ReflectionRep circuit(const std::string& name, int n, const CycloElem& l, const CycloElem& m) {
    if (n < 3) throw std::invalid_argument("circuit diagram needs n >= 3");
    const FieldCtx& f = l.ctx();
    const CycloElem one(f, Rational(1));
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, one, one});
    e.push_back({0, n - 1, l, m});
    ReflectionRep rep = chain(name, f, n, e);
    rep.circuit = true;
    return rep;
}

/// Sign making s1 (s2 s3)^r1 s2 an involution, from the u-value condition at gamma_k.
long folding_sign(long r, long k) {
    const long r1 = (r - 1) / 2;
    const CycloElem s = sqrt_root(r, k);
    const CycloElem g = root_of_v(r, k).lift(s.ctx());
    const CycloElem a = eval_at(u_poly(r1 + 1), g), b = eval_at(u_poly(r1), g);
    for (long eps : {1L, -1L}) {
        const CycloElem es = s * Rational(eps);
        if ((r1 % 2 == 0 ? a + es * b : es * a + b).is_zero()) return eps;
    }
    throw std::logic_error("no folding sign");
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> v;
    for (const auto& [n, b] : fixed_catalog()) v.push_back(n);
    return v;
}

std::vector<std::string> preset_families() {
    return {"gppn:p:n", "gnn3:n:k", "atilde:n", "wppr:p:r:k", "coxeter3:p:q:r"};
}

ReflectionRep preset(const std::string& name) {
    for (const auto& [n, b] : fixed_catalog())
        if (n == name) return b(n);
    const std::string fam = name.substr(0, name.find(':'));
    if (fam == "gppn") {
        auto a = parse_args(name, 2);
        if (a[0] < 2) throw std::invalid_argument("gppn needs p >= 2");
        const FieldCtx& f = field_ctx(a[0]);
        return circuit(name, static_cast<int>(a[1]), CycloElem::zeta(f, 1), CycloElem::zeta(f, -1));
    }
    if (fam == "atilde") {
        auto a = parse_args(name, 1);
        const CycloElem one(field_ctx(1), Rational(1));
        return circuit(name, static_cast<int>(a[0]), one, one);
    }
    if (fam == "gnn3") {
        auto a = parse_args(name, 2);
        const long n = a[0], k = a[1];
        if (n < 2 || k < 1 || gcd_l(k, n) != 1) throw std::invalid_argument("gnn3 needs n >= 2 and gcd(k, n) = 1");
        const FieldCtx& f = field_ctx(n);
        const CycloElem one(f, Rational(1));
        return build_rep(DiagramSpec::rank3(one, one, -one - CycloElem::zeta(f, k), -one - CycloElem::zeta(f, -k)), name);
    }
    if (fam == "wppr") {
        auto a = parse_args(name, 3);
        const long p = a[0], r = a[1], k = a[2];
        if (p < 3 || r < 3 || r % 2 == 0) throw std::invalid_argument("wppr needs p >= 3 and odd r >= 3");
        const FieldCtx& f = field_ctx(lcm_l(p, 2 * r));
        const CycloElem al = root_of_v(p, 1).lift(f);
        const CycloElem l = sqrt_root(r, k).lift(f) * Rational(folding_sign(r, k));
        return build_rep(DiagramSpec::rank3(al, al, l, l), name);
    }
    if (fam == "coxeter3") {
        auto a = parse_args(name, 3);
        for (long x : a)
            if (x < 2) throw std::invalid_argument("coxeter3 needs orders >= 2");
        const long N = lcm_l(lcm_l(a[0], a[1]), 2 * a[2]);
        const FieldCtx& f = field_ctx(N);
        auto root = [&](long p) { return p == 2 ? CycloElem(f) : root_of_v(p, 1).lift(f); };
        const CycloElem l = a[2] == 2 ? CycloElem(f) : sqrt_root(a[2], 1).lift(f);
        return build_rep(DiagramSpec::rank3(root(a[0]), root(a[1]), l, l), name);
    }
    std::string msg = "unknown preset '" + name + "'; known:";
    for (const auto& n : preset_names()) msg += " " + n;
    for (const auto& n : preset_families()) msg += " " + n;
    throw std::invalid_argument(msg);
}

std::string catalog_json() {
    using nlohmann::ordered_json;
    ordered_json root;
    root["version"] = REFLEKTOR_VERSION;
    root["format"] = 1;
    std::vector<std::string> names = preset_names();
    for (const char* s : {"gppn:2:3", "gppn:3:3", "gppn:4:3", "gppn:2:4", "gppn:3:4", "atilde:3", "gnn3:2:1", "gnn3:3:1",
                          "gnn3:4:1", "gnn3:5:1", "gnn3:6:1", "wppr:5:3:1", "wppr:3:5:1", "wppr:3:5:2", "wppr:4:3:1"})
        names.emplace_back(s);
    ordered_json arr = ordered_json::array();
    for (const auto& n : names) {
        const ReflectionRep rep = preset(n);
        ordered_json p;
        p["name"] = n;
        p["rank"] = rep.rank();
        p["conductor"] = rep.conductor();
        p["circuit"] = rep.circuit;
        ordered_json edges = ordered_json::array();
        for (int i = 0; i < rep.rank(); ++i)
            for (int j = i + 1; j < rep.rank(); ++j) {
                const auto& kij = rep.spec.coeffs[i][j];
                const auto& kji = rep.spec.coeffs[j][i];
                if (kij.is_zero() && kji.is_zero()) continue;
                edges.push_back({{"i", i + 1}, {"j", j + 1}, {"kij", kij.to_string()}, {"kji", kji.to_string()}});
            }
        p["edges"] = edges;
        arr.push_back(p);
    }
    root["presets"] = arr;
    return root.dump(2) + "\n";
}

}  // namespace reflektor
