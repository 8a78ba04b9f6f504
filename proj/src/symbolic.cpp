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

#include "reflektor/cyclo.hpp"
#include "reflektor/upoly.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflektor {

namespace {

const MPoly a = MPoly::var(Var::alpha);
const MPoly b = MPoly::var(Var::beta);
const MPoly l = MPoly::var(Var::l);
const MPoly m = MPoly::var(Var::m);
const MPoly g = l * m;
const MPoly ab = a * l + b * m;

MPoly U(long n, const MPoly& x) { return upoly_at(u_poly(n), x); }

long half_floor(long k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

SymMatrix mat(std::initializer_list<MPoly> e) {
    SymMatrix M(3, MPoly());
    int i = 0;
    for (const auto& x : e) {
        M(i / 3, i % 3) = x;
        ++i;
    }
    return M;
}

std::string kid(const std::string& base, long k) { return base + "/k=" + std::to_string(k); }

// Runs f(k) for each k in parallel and records the results in order.
void run_range(SuiteReport& rep, long lo, long hi,
               const std::function<std::vector<CaseResult>(long)>& f) {
    const long n = hi - lo + 1;
    std::vector<std::vector<CaseResult>> out(static_cast<std::size_t>(std::max(0L, n)));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(lo + i);
    for (auto& v : out)
        for (auto& c : v) rep.check(c.id, c.status == Status::pass, c.detail);
}

CaseResult cmp(const std::string& id, bool ok) { return {id, ok ? Status::pass : Status::fail, ok ? "" : "mismatch"}; }

const std::array<SymMatrix, 3>& gens() {
    static const std::array<SymMatrix, 3> G = sym_generators();
    return G;
}

SymMatrix closed_power(int pair, long k) {
    const long j = half_floor(k);
    const bool even = k % 2 == 0;
    if (pair == 12) {
        const MPoly& x = a;
        if (even)
            return mat({U(4 * j + 1, x), -(a * U(4 * j, x)), b * a * U(2 * j, x).pow(2) + a * l * U(2 * j + 1, x) * U(2 * j, x),
                        U(4 * j, x), -U(4 * j - 1, x), a * l * U(2 * j, x).pow(2) + b * U(2 * j, x) * U(2 * j - 1, x),
                        0, 0, 1});
        return mat({U(4 * j + 3, x), -(a * U(4 * j + 2, x)), b * U(2 * j + 1, x).pow(2) + a * l * U(2 * j + 2, x) * U(2 * j + 1, x),
                    U(4 * j + 2, x), -U(4 * j + 1, x), l * U(2 * j + 1, x).pow(2) + b * U(2 * j + 1, x) * U(2 * j, x),
                    0, 0, 1});
    }
    if (pair == 13) {
        const MPoly& x = b;
        if (even)
            return mat({U(4 * j + 1, x), a * b * U(2 * j, x).pow(2) + b * m * U(2 * j + 1, x) * U(2 * j, x), -(b * U(4 * j, x)),
                        0, 1, 0,
                        U(4 * j, x), b * m * U(2 * j, x).pow(2) + a * U(2 * j, x) * U(2 * j - 1, x), -U(4 * j - 1, x)});
        return mat({U(4 * j + 3, x), a * U(2 * j + 1, x).pow(2) + b * m * U(2 * j + 2, x) * U(2 * j + 1, x), -(b * U(4 * j + 2, x)),
                    0, 1, 0,
                    U(4 * j + 2, x), m * U(2 * j + 1, x).pow(2) + a * U(2 * j + 1, x) * U(2 * j, x), -U(4 * j + 1, x)});
    }
    const MPoly& x = g;
    if (even)
        return mat({1, 0, 0,
                    g * U(2 * j, x).pow(2) + l * U(2 * j + 1, x) * U(2 * j, x), U(4 * j + 1, x), -(l * U(4 * j, x)),
                    g * U(2 * j, x).pow(2) + m * U(2 * j, x) * U(2 * j - 1, x), m * U(4 * j, x), -U(4 * j - 1, x)});
    return mat({1, 0, 0,
                U(2 * j + 1, x).pow(2) + l * U(2 * j + 2, x) * U(2 * j + 1, x), U(4 * j + 3, x), -(l * U(4 * j + 2, x)),
                U(2 * j + 1, x).pow(2) + m * U(2 * j + 1, x) * U(2 * j, x), m * U(4 * j + 2, x), -U(4 * j + 1, x)});
}

struct ReflClosed {
    SymMatrix direct, closed;
    std::array<MPoly, 3> v;
};

ReflClosed closed_reflection(int pair, long k) {
    const auto& G = gens();
    const long j = half_floor(k);
    const bool even = k % 2 == 0;
    ReflClosed r;
    if (pair == 12) {
        const MPoly& x = a;
        r.direct = G[0] * sym_pow(G[0] * G[1], k);
        if (even) {
            MPoly w = a * l * U(2 * j, x) + b * U(2 * j - 1, x);
            r.closed = mat({U(4 * j - 1, x), -(a * U(4 * j - 2, x)), U(2 * j - 1, x) * w,
                            U(4 * j, x), -U(4 * j - 1, x), U(2 * j, x) * w, 0, 0, 1});
            r.v = {U(2 * j - 1, x), U(2 * j, x), MPoly()};
        } else {
            MPoly w = b * U(2 * j, x) + l * U(2 * j + 1, x);
            r.closed = mat({U(4 * j + 1, x), -(a * U(4 * j, x)), a * U(2 * j, x) * w,
                            U(4 * j + 2, x), -U(4 * j + 1, x), U(2 * j + 1, x) * w, 0, 0, 1});
            r.v = {a * U(2 * j, x), U(2 * j + 1, x), MPoly()};
        }
    } else if (pair == 13) {
        const MPoly& x = b;
        r.direct = G[0] * sym_pow(G[0] * G[2], k);
        if (even) {
            MPoly w = a * U(2 * j - 1, x) + b * m * U(2 * j, x);
            r.closed = mat({U(4 * j - 1, x), U(2 * j - 1, x) * w, -(b * U(4 * j - 2, x)), 0, 1, 0,
                            U(4 * j, x), U(2 * j, x) * w, -U(4 * j - 1, x)});
            r.v = {U(2 * j - 1, x), MPoly(), U(2 * j, x)};
        } else {
            MPoly w = m * U(2 * j + 1, x) + a * U(2 * j, x);
            r.closed = mat({U(4 * j + 1, x), b * U(2 * j, x) * w, -(b * U(4 * j, x)), 0, 1, 0,
                            U(4 * j + 2, x), U(2 * j + 1, x) * w, -U(4 * j + 1, x)});
            r.v = {b * U(2 * j, x), MPoly(), U(2 * j + 1, x)};
        }
    } else {
        const MPoly& x = g;
        r.direct = G[1] * sym_pow(G[1] * G[2], k);
        if (even) {
            MPoly w = U(2 * j - 1, x) + l * U(2 * j, x);
            r.closed = mat({1, 0, 0, U(2 * j - 1, x) * w, U(4 * j - 1, x), -(l * U(4 * j - 2, x)),
                            m * U(2 * j, x) * w, m * U(4 * j, x), -U(4 * j - 1, x)});
            r.v = {MPoly(), U(2 * j - 1, x), m * U(2 * j, x)};
        } else {
            MPoly w = U(2 * j + 1, x) + m * U(2 * j, x);
            r.closed = mat({1, 0, 0, l * U(2 * j, x) * w, U(4 * j + 1, x), -(l * U(4 * j, x)),
                            U(2 * j + 1, x) * w, m * U(4 * j + 2, x), -U(4 * j + 1, x)});
            r.v = {MPoly(), l * U(2 * j, x), U(2 * j + 1, x)};
        }
    }
    return r;
}

bool is_minus_eigen(const SymMatrix& M, const std::array<MPoly, 3>& v) {
    for (int i = 0; i < 3; ++i) {
        MPoly acc;
        for (int j = 0; j < 3; ++j) acc += M(i, j) * v[static_cast<std::size_t>(j)];
        if (acc != -v[static_cast<std::size_t>(i)]) return false;
    }
    return !(v[0].is_zero() && v[1].is_zero() && v[2].is_zero());
}

std::vector<MPoly> x_poly(std::initializer_list<MPoly> c) { return std::vector<MPoly>(c); }

std::vector<MPoly> poly_mul(const std::vector<MPoly>& p, const std::vector<MPoly>& q) {
    std::vector<MPoly> r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

MPoly poly_at(const std::vector<MPoly>& p, long x) {
    MPoly acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * MPoly(x) + *it;
    return acc;
}

bool divisible_coeffwise(const std::vector<MPoly>& d, const MPoly& lin_a, const MPoly& lin_b) {
    for (const auto& c : d)
        if (!divisible_by_linear(c, Var::m, lin_a, lin_b)) return false;
    return true;
}

}  // namespace

std::array<SymMatrix, 3> sym_generators() {
    return {mat({-1, a, b, 0, 1, 0, 0, 0, 1}), mat({1, 0, 0, 1, -1, l, 0, 0, 1}), mat({1, 0, 0, 0, 1, 0, 1, m, -1})};
}

MPoly sym_gamma() { return g; }
MPoly sym_delta() { return MPoly(8) - MPoly(2) * a - MPoly(2) * b - MPoly(2) * g - ab; }
MPoly sym_theta() { return MPoly(-4) + a + b + g + a * l; }
MPoly sym_theta_prime() { return MPoly(4) - a - b - g - b * m; }

MPoly pair_C(const SymMatrix& s, const SymMatrix& t) {
    if (!s.is_reflection() || !t.is_reflection()) throw std::invalid_argument("pair_C expects reflections");
    const SymMatrix I = SymMatrix::identity(s.dim(), MPoly(1));
    return ((s - I) * (t - I)).trace();
}

SymMatrix sym_pow(const SymMatrix& M, long k) { return M.pow(k); }

SymMatrix sym_conj(const SymMatrix& x, std::initializer_list<int> word) {
    const auto& G = gens();
    SymMatrix w = SymMatrix::identity(3, MPoly(1)), winv = w;
    for (int i : word) {
        w = w * G[static_cast<std::size_t>(i - 1)];
        winv = G[static_cast<std::size_t>(i - 1)] * winv;
    }
    return winv * x * w;
}

SuiteReport verify_power_formulas(long k_lo, long k_hi) {
    SuiteReport rep("matrices.powers");
    const auto& G = gens();
    const std::array<std::pair<int, SymMatrix>, 3> prods = {
        std::pair{12, G[0] * G[1]}, std::pair{13, G[0] * G[2]}, std::pair{23, G[1] * G[2]}};
    run_range(rep, k_lo, k_hi, [&](long k) {
        std::vector<CaseResult> out;
        for (const auto& [pair, P] : prods)
            out.push_back(cmp(kid("s" + std::to_string(pair / 10) + "s" + std::to_string(pair % 10), k), sym_pow(P, k) == closed_power(pair, k)));
        return out;
    });
    return rep;
}

SuiteReport verify_reflection_formulas(long k_lo, long k_hi) {
    SuiteReport rep("matrices.reflections");
    run_range(rep, k_lo, k_hi, [&](long k) {
        std::vector<CaseResult> out;
        for (int pair : {12, 13, 23}) {
            ReflClosed r = closed_reflection(pair, k);
            const std::string base = pair == 23 ? "s2(s2s3)" : (pair == 12 ? "s1(s1s2)" : "s1(s1s3)");
            out.push_back(cmp(kid(base + "/matrix", k), r.direct == r.closed));
            out.push_back(cmp(kid(base + "/eigenvector", k), is_minus_eigen(r.direct, r.v)));
        }
        return out;
    });
    return rep;
}

SuiteReport verify_C_catalog(long k_lo, long k_hi) {
    SuiteReport rep("pairings");
    const auto& G = gens();
    const SymMatrix &s1 = G[0], &s2 = G[1], &s3 = G[2];
    run_range(rep, k_lo, k_hi, [&](long k) {
        std::vector<CaseResult> out;
        struct Item {
            std::string id;
            MPoly direct, factored, expanded;
        };
        std::vector<Item> items;
        for (long e : {2 * k, 2 * k + 1}) {
            const bool even = e % 2 == 0;
            const long j = k;
            const std::string par = even ? "even" : "odd";
            {
                const MPoly& x = a;
                MPoly d = pair_C(s3, s1 * sym_pow(s1 * s2, e));
                if (even)
                    items.push_back({"s3|s1(s1s2)^" + par, d, (U(2 * j - 1, x) + m * U(2 * j, x)) * (a * l * U(2 * j, x) + b * U(2 * j - 1, x)),
                                     a * g * U(2 * j, x).pow(2) + b * U(2 * j - 1, x).pow(2) + ab * U(2 * j, x) * U(2 * j - 1, x)});
                else
                    items.push_back({"s3|s1(s1s2)^" + par, d, (a * U(2 * j, x) + m * U(2 * j + 1, x)) * (b * U(2 * j, x) + l * U(2 * j + 1, x)),
                                     g * U(2 * j + 1, x).pow(2) + a * b * U(2 * j, x).pow(2) + ab * U(2 * j + 1, x) * U(2 * j, x)});
            }
            {
                const MPoly& x = b;
                MPoly d = pair_C(s2, s1 * sym_pow(s1 * s3, e));
                if (even)
                    items.push_back({"s2|s1(s1s3)^" + par, d, (U(2 * j - 1, x) + l * U(2 * j, x)) * (a * U(2 * j - 1, x) + b * m * U(2 * j, x)),
                                     b * g * U(2 * j, x).pow(2) + a * U(2 * j - 1, x).pow(2) + ab * U(2 * j, x) * U(2 * j - 1, x)});
                else
                    items.push_back({"s2|s1(s1s3)^" + par, d, (b * U(2 * j, x) + l * U(2 * j + 1, x)) * (m * U(2 * j + 1, x) + a * U(2 * j, x)),
                                     g * U(2 * j + 1, x).pow(2) + a * b * U(2 * j, x).pow(2) + ab * U(2 * j + 1, x) * U(2 * j, x)});
            }
            {
                const MPoly& x = g;
                MPoly d = pair_C(s1, s2 * sym_pow(s2 * s3, e));
                if (even)
                    items.push_back({"s1|s2(s2s3)^" + par, d, (a * U(2 * j - 1, x) + b * m * U(2 * j, x)) * (U(2 * j - 1, x) + l * U(2 * j, x)),
                                     b * g * U(2 * j, x).pow(2) + a * U(2 * j - 1, x).pow(2) + ab * U(2 * j, x) * U(2 * j - 1, x)});
                else
                    items.push_back({"s1|s2(s2s3)^" + par, d, (a * l * U(2 * j, x) + b * U(2 * j + 1, x)) * (U(2 * j + 1, x) + m * U(2 * j, x)),
                                     b * U(2 * j + 1, x).pow(2) + a * g * U(2 * j, x).pow(2) + ab * U(2 * j + 1, x) * U(2 * j, x)});
            }
        }
        for (const auto& it : items) {
            out.push_back(cmp(kid(it.id + "/factored", k), it.direct == it.factored));
            out.push_back(cmp(kid(it.id + "/expanded", k), it.direct == it.expanded));
        }
        return out;
    });

    // pairings with conjugated generators
    auto u3 = [](const MPoly& x) { return x - MPoly(1); };
    struct Conj {
        std::string id;
        SymMatrix s, t;
        MPoly factored, expanded;
    };
    const std::vector<Conj> conj = {
        {"s1|s2^s3", s1, sym_conj(s2, {3}), (l + MPoly(1)) * (a + b * m), a + b * g + ab},
        {"s1|s3^s2", s1, sym_conj(s3, {2}), (m + MPoly(1)) * (b + a * l), b + a * g + ab},
        {"s2|s3^s1", s2, sym_conj(s3, {1}), (a + m) * (b + l), g + a * b + ab},
        {"s2|s1^s3", s2, sym_conj(s1, {3}), (l + MPoly(1)) * (a + b * m), a + b * g + ab},
        {"s3|s1^s2", s3, sym_conj(s1, {2}), (m + MPoly(1)) * (b + a * l), b + a * g + ab},
        {"s3|s2^s1", s3, sym_conj(s2, {1}), (a + m) * (b + l), g + a * b + ab},
        {"s1|s2^s3s2", s1, sym_conj(s2, {3, 2}), (l + u3(g)) * (b * m + a * u3(g)), b * g + a * u3(g).pow(2) + u3(g) * ab},
        {"s1|s3^s2s3", s1, sym_conj(s3, {2, 3}), (m + u3(g)) * (a * l + b * u3(g)), a * g + b * u3(g).pow(2) + u3(g) * ab},
        {"s2|s1^s3s1", s2, sym_conj(s1, {3, 1}), (l + u3(b)) * (b * m + a * u3(b)), b * g + a * u3(b).pow(2) + u3(b) * ab},
        {"s2|s3^s1s3", s2, sym_conj(s3, {1, 3}), (b + l * u3(b)) * (a + m * u3(b)), a * b + g * u3(b).pow(2) + u3(b) * ab},
        {"s3|s1^s2s1", s3, sym_conj(s1, {2, 1}), (b * u3(a) + a * l) * (m + u3(a)), a * g + b * u3(a).pow(2) + u3(a) * ab},
        {"s3|s2^s1s2", s3, sym_conj(s2, {1, 2}), (a + m * u3(a)) * (b + l * u3(a)), a * b + g * u3(a).pow(2) + u3(a) * ab},
    };
    for (const auto& c : conj) {
        MPoly d = pair_C(c.s, c.t);
        rep.check("conjugate/" + c.id + "/factored", d == c.factored);
        rep.check("conjugate/" + c.id + "/expanded", d == c.expanded);
        rep.check("conjugate/" + c.id + "/symmetric", d == pair_C(c.t, c.s));
    }
    rep.check("self/s1", pair_C(s1, s1) == MPoly(4));
    rep.check("generators/s1s2", pair_C(s1, s2) == a);
    rep.check("generators/s1s3", pair_C(s1, s3) == b);
    rep.check("generators/s2s3", pair_C(s2, s3) == g);
    return rep;
}

SuiteReport verify_charpoly_catalog(long k_lo, long k_hi) {
    SuiteReport rep("charpoly");
    const auto& G = gens();
    const MPoly th = sym_theta(), thp = sym_theta_prime(), D = sym_delta();
    rep.check("invariants/theta_prime_minus_theta", thp - th == D);
    rep.check("invariants/theta_plus_theta_prime", th + thp == a * l - b * m);
    for (int i = 0; i < 3; ++i)
        rep.check("invariants/det_s" + std::to_string(i + 1), G[static_cast<std::size_t>(i)].det() == MPoly(-1));
    struct Family {
        std::string name;
        std::function<SymMatrix(long)> elem;
        MPoly x;
    };
    const std::vector<Family> fams = {
        {"t", [&](long k) { return G[0] * sym_pow(G[1] * G[2], k); }, g},
        {"x", [&](long k) { return G[1] * sym_pow(G[2] * G[0], k); }, b},
        {"y", [&](long k) { return G[2] * sym_pow(G[0] * G[1], k); }, a},
    };
    // Delta = (-2l - beta) m + (8 - 2 alpha - 2 beta - alpha l);  alpha l - beta m = (-beta) m + alpha l
    const MPoly d_a = MPoly(-2) * l - b, d_b = MPoly(8) - MPoly(2) * a - MPoly(2) * b - a * l;
    const MPoly e_a = -b, e_b = a * l;
    run_range(rep, k_lo, k_hi, [&](long k) {
        std::vector<CaseResult> out;
        for (const auto& f : fams) {
            const SymMatrix M = f.elem(k);
            const auto P = M.charpoly();
            const MPoly& x = f.x;
            const long j = half_floor(k);
            MPoly q, r;
            if (k % 2 == 0) {
                q = x * U(2 * j, x).pow(2);
                r = U(2 * j, x) * U(2 * j - 1, x);
            } else {
                q = U(2 * j + 1, x).pow(2);
                r = U(2 * j + 1, x) * U(2 * j, x);
            }
            const auto closed = x_poly({1, MPoly(-1) + thp * q - (th + thp) * r, -(MPoly(1) + th * q - (th + thp) * r), 1});
            const std::string base = f.name + "_k";
            out.push_back(cmp(kid(base + "/closed_form", k), P == closed));
            out.push_back(cmp(kid(base + "/det", k), M.det() == MPoly(-1)));
            out.push_back(cmp(kid(base + "/value_at_1", k), poly_at(P, 1) == D * q));
            out.push_back(cmp(kid(base + "/value_at_minus_1", k), poly_at(P, -1) == -((a * l - b * m) * U(2 * k, x))));
            // Delta = 0:  P = (X - 1)(X^2 - theta u_{2k}(x) X - 1)
            auto F = poly_mul(x_poly({-1, 1}), x_poly({-1, -(th * U(2 * k, x)), 1}));
            std::vector<MPoly> diff(4);
            for (std::size_t i = 0; i < 4; ++i) diff[i] = P[i] - F[i];
            out.push_back(cmp(kid(base + "/delta_zero_factorization", k), divisible_coeffwise(diff, d_a, d_b)));
            // alpha l = beta m:  P = (X + 1)(X^2 - (2 + theta q) X + 1)
            auto F2 = poly_mul(x_poly({1, 1}), x_poly({1, -(MPoly(2) + th * q), 1}));
            for (std::size_t i = 0; i < 4; ++i) diff[i] = P[i] - F2[i];
            out.push_back(cmp(kid(base + "/balanced_factorization", k), divisible_coeffwise(diff, e_a, e_b)));
        }
        return out;
    });
    return rep;
}

namespace {

using FM = SquareMatrix<CycloElem>;

FM fmat(const FieldCtx& K, std::initializer_list<CycloElem> e) {
    FM M(3, CycloElem(K));
    int i = 0;
    for (const auto& x : e) {
        M(i / 3, i % 3) = x;
        ++i;
    }
    return M;
}

CycloElem fC(const FM& s, const FM& t) {
    const FM I = FM::identity(s.dim(), one_like(s(0, 0)));
    return ((s - I) * (t - I)).trace();
}

}  // namespace

SuiteReport verify_half_turn_catalog() {
    SuiteReport rep("pairings.half_turn");
    struct Combo {
        long p1, q1, r1;
    };
    std::vector<Combo> combos;
    for (long p1 : {2, 3, 4, 5})
        for (long q1 : {2, 3, 4})
            for (long r1 : {2, 3, 4}) combos.push_back({p1, q1, r1});
    const std::vector<Rational> ls = {Rational(1), Rational::make(3, 2), Rational(-3)};
    std::vector<SuiteReport> parts(combos.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t ci = 0; ci < combos.size(); ++ci) {
        const auto [p1, q1, r1] = combos[ci];
        SuiteReport& part = parts[ci];
        const FieldCtx& K = field_ctx(lcm_l(lcm_l(2 * p1, 2 * q1), 2 * r1));
        const CycloElem one(K, Rational(1)), zero(K);
        const CycloElem al = root_of_v(2 * p1, 1).lift(K), be = root_of_v(2 * q1, 1).lift(K), ga = root_of_v(2 * r1, 1).lift(K);
        auto c = [&](long v) { return one * Rational(v); };
        for (const auto& lr : ls) {
            const CycloElem L = one * lr, Mm = ga / L;
            const FM s1 = fmat(K, {c(-1), al, be, zero, one, zero, zero, zero, one});
            const FM s2 = fmat(K, {one, zero, zero, one, c(-1), L, zero, zero, one});
            const FM s3 = fmat(K, {one, zero, zero, zero, one, zero, one, Mm, c(-1)});
            const CycloElem D = c(8) - c(2) * al - c(2) * be - c(2) * ga - (al * L + be * Mm);
            const CycloElem fa = c(4) - al, fb = c(4) - be, fg = c(4) - ga;
            const std::string tag = "p=" + std::to_string(2 * p1) + ",q=" + std::to_string(2 * q1) + ",r=" + std::to_string(2 * r1) + ",l=" + lr.to_string();
            const FM P12 = (s1 * s2).pow(p1), P13 = (s1 * s3).pow(q1), P23 = (s2 * s3).pow(r1);
            part.check(tag + "/power12", P12 == fmat(K, {c(-1), zero, c(2) * (c(2) * be + al * L) / fa, zero, c(-1), c(2) * (be + c(2) * L) / fa, zero, zero, one}));
            part.check(tag + "/power13", P13 == fmat(K, {c(-1), c(2) * (c(2) * al + be * Mm) / fb, zero, zero, one, zero, zero, c(2) * (al + c(2) * Mm) / fb, c(-1)}));
            part.check(tag + "/power23", P23 == fmat(K, {one, zero, zero, c(2) * (L + c(2)) / fg, c(-1), zero, c(2) * (Mm + c(2)) / fg, zero, c(-1)}));
            const FM A = s1 * P12, B = s2 * P12, Cq = s1 * P13, Dq = s3 * P13, E = s2 * P23, F = s3 * P23;
            struct Item {
                const char* id;
                CycloElem direct, value;
            };
            const CycloElem fab = fa * fb, fag = fa * fg, fbg = fb * fg;
            const std::vector<Item> items = {
                {"1a", fC(s3, A), c(4) - be - c(2) * D / fa},
                {"1b", fC(s3, B), c(4) - ga - c(2) * D / fa},
                {"2a", fC(s2, Cq), c(4) - al - c(2) * D / fb},
                {"2b", fC(s2, Dq), c(4) - ga - c(2) * D / fb},
                {"3a", fC(s1, E), c(4) - al - c(2) * D / fg},
                {"3b", fC(s1, F), c(4) - be - c(2) * D / fg},
                {"4a", fC(A, Cq), c(4) - c(8) * D / fab},
                {"4a/product", fC(A, Cq), c(4) * (be + c(2) * L) / fa * (al + c(2) * Mm) / fb},
                {"4b", fC(A, Dq), be - c(2) * be * D / fab},
                {"4b/product", fC(A, Dq), be * (be + c(2) * L) / fa * (al + c(2) * Mm) / fb},
                {"4c", fC(B, Cq), al - c(2) * al * D / fab},
                {"4c/product", fC(B, Cq), al * (be + c(2) * L) / fa * (al + c(2) * Mm) / fb},
                {"4d", fC(B, Dq), ga + D * (c(8) - c(2) * al - c(2) * be) / fab},
                {"4d/product", fC(B, Dq), (c(-8) + c(2) * al + c(2) * be + al * L) / fa * (c(-8) + c(2) * al + c(2) * be + be * Mm) / fb},
                {"5a", fC(A, E), al - c(2) * al * D / fag},
                {"5a/product", fC(A, E), al * (c(2) * be + al * L) / fa * (Mm + c(2)) / fg},
                {"5b", fC(A, F), be + D * (c(8) - c(2) * al - c(2) * ga) / fag},
                {"5b/product", fC(A, F), (c(-8) + c(2) * al + c(2) * ga + be * Mm) / fa * (c(-8) + c(2) * al + c(2) * ga + al * L) / fg},
                {"5c", fC(B, E), c(4) - c(8) * D / fag},
                {"5c/product", fC(B, E), c(4) * (c(2) * be + al * L) / fa * (Mm + c(2)) / fg},
                {"5d", fC(B, F), ga - c(2) * ga * D / fag},
                {"5d/product", fC(B, F), ga * (c(2) * be + al * L) / fa * (Mm + c(2)) / fg},
                {"6a", fC(Cq, E), al + D * (c(8) - c(2) * be - c(2) * ga) / fbg},
                {"6a/product", fC(Cq, E), (c(-8) + c(2) * be + c(2) * ga + al * L) / fb * (c(-8) + c(2) * be + c(2) * ga + be * Mm) / fg},
                {"6b", fC(Cq, F), be - c(2) * be * D / fbg},
                {"6b/product", fC(Cq, F), be * (c(2) * al + be * Mm) / fb * (L + c(2)) / fg},
                {"6c", fC(Dq, E), ga - c(2) * ga * D / fbg},
                {"6c/product", fC(Dq, E), ga * (c(2) * al + be * Mm) / fb * (L + c(2)) / fg},
                {"6d", fC(Dq, F), c(4) - c(8) * D / fbg},
                {"6d/product", fC(Dq, F), c(4) * (c(2) * al + be * Mm) / fb * (L + c(2)) / fg},
            };
            for (const auto& it : items) part.check(tag + "/" + it.id, it.direct == it.value);
            // t_{r1} = s1 (s2 s3)^{r1}:  P = (X + 1)(X^2 - 2(1 - Delta/(4 - gamma)) X + 1)
            const auto cp = (s1 * P23).charpoly();
            const CycloElem w = c(2) * (one - D / fg);
            // (X+1)(X^2 - wX + 1) = X^3 + (1 - w) X^2 + (1 - w) X + 1
            part.check(tag + "/charpoly_t", cp[3] == one && cp[2] == one - w && cp[1] == one - w && cp[0] == one);
        }
    }
    for (const auto& p : parts) rep.merge(p);
    return rep;
}

}  // namespace reflektor
