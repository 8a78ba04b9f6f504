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

#include "reflektor/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reflektor {
namespace {

/// Row index where g differs from the identity, or -1.
int single_row(const FieldMatrix& g) {
    const FieldMatrix id = FieldMatrix::identity(g.dim(), g.unit());
    int row = -1;
    for (int r = 0; r < g.dim(); ++r)
        for (int c = 0; c < g.dim(); ++c)
            if (g(r, c) != id(r, c)) {
                if (row >= 0 && row != r) return -1;
                row = r;
            }
    return row;
}

struct Gen {
    FieldMatrix m;
    int row;
};

std::vector<Gen> prepare(const std::vector<FieldMatrix>& gens) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    std::vector<Gen> out;
    for (const auto& g : gens) {
        if (g.dim() != gens.front().dim() || g.unit().conductor() != gens.front().unit().conductor())
            throw std::invalid_argument("generators differ in dimension or field");
        out.push_back({g, single_row(g)});
    }
    return out;
}

FieldMatrix times(const FieldMatrix& m, const Gen& g) { return g.row >= 0 ? m.right_row_mul(g.m, g.row) : m * g.m; }

template <bool Parallel>
ClosureResult run_closure(const std::vector<FieldMatrix>& gens_in, const ClosureOptions& opt) {
    const std::vector<Gen> gens = prepare(gens_in);
    ClosureResult res;
    res.generator_count = gens.size();
    const FieldMatrix id = FieldMatrix::identity(gens.front().m.dim(), gens.front().m.unit());
    std::vector<FieldMatrix> frontier{id};
    res.element_keys.insert(id.key());
    if (opt.store_elements) res.elements.push_back(id);

    while (!frontier.empty()) {
        const std::size_t g = gens.size();
        const std::size_t total = frontier.size() * g;
        std::vector<FieldMatrix> prod(total);
        std::vector<std::string> keys(total);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (long t = 0; t < static_cast<long>(total); ++t) {
                prod[t] = times(frontier[t / g], gens[t % g]);
                keys[t] = prod[t].key();
            }
        } else {
            for (std::size_t t = 0; t < total; ++t) {
                prod[t] = times(frontier[t / g], gens[t % g]);
                keys[t] = prod[t].key();
            }
        }
        res.products += total;
        std::vector<FieldMatrix> next;
        for (std::size_t t = 0; t < total; ++t) {
            if (!res.element_keys.insert(std::move(keys[t])).second) continue;
            if (opt.store_elements) res.elements.push_back(prod[t]);
            next.push_back(std::move(prod[t]));
            if (res.element_keys.size() > opt.cap) {
                res.cap_exceeded = true;
                res.order = res.element_keys.size();
                return res;
            }
        }
        frontier = std::move(next);
    }
    res.order = res.element_keys.size();
    return res;
}

}  // namespace

ClosureResult closure_serial(const std::vector<FieldMatrix>& gens, const ClosureOptions& opt) {
    return run_closure<false>(gens, opt);
}

ClosureResult closure_parallel(const std::vector<FieldMatrix>& gens, const ClosureOptions& opt) {
    return run_closure<true>(gens, opt);
}

ClosureResult closure(const std::vector<FieldMatrix>& gens, const ClosureOptions& opt) { return closure_parallel(gens, opt); }

std::optional<long> element_order(const FieldMatrix& m, long cap) {
    FieldMatrix p = m;
    for (long n = 1; n <= cap; ++n) {
        if (p.is_identity()) return n;
        p = p * m;
    }
    return std::nullopt;
}

std::optional<CycloElem> scalar_power_check(const FieldMatrix& m, long n) {
    CycloElem lambda;
    if (m.pow(n).is_scalar(&lambda)) return lambda;
    return std::nullopt;
}

bool is_unipotent(const FieldMatrix& m) {
    const auto c = m.charpoly();
    const int n = m.dim();
    for (int i = 0; i <= n; ++i) {
        Rational want(binomial(n, i));
        if ((n - i) % 2) want = -want;
        if (c[static_cast<std::size_t>(i)] != CycloElem(m.unit().ctx(), want)) return false;
    }
    return true;
}

bool check_relation(const ReflectionRep& rep, const std::string& word, long exponent) {
    return eval_word(rep, word).pow(exponent).is_identity();
}

bool check_equation(const ReflectionRep& rep, const std::string& equation) {
    const auto [lhs, rhs] = split_equation(equation);
    return eval_word(rep, lhs) == eval_word(rep, rhs);
}

std::size_t center_order(const ClosureResult& closure, const std::vector<FieldMatrix>& gens) {
    if (closure.cap_exceeded) throw std::invalid_argument("center needs a complete closure");
    if (closure.elements.size() != closure.order) throw std::invalid_argument("center needs stored elements");
    std::size_t n = 0;
    for (const auto& x : closure.elements)
        if (std::all_of(gens.begin(), gens.end(), [&](const FieldMatrix& g) { return x * g == g * x; })) ++n;
    return n;
}

std::size_t monomial_closure_order(long p, int n) {
    if (p < 1 || n < 2) throw std::invalid_argument("monomial model needs p >= 1, n >= 2");
    // element: image of each coordinate and the exponent of zeta_p on it
    using Elem = std::vector<long>;
    auto apply = [&](const Elem& x, int a, int b, long ea, long eb) {
        Elem y = x;
        // right multiply by the monomial swapping a and b with exponents ea (on a -> b) and eb
        std::swap(y[a], y[b]);
        std::swap(y[n + a], y[n + b]);
        y[n + a] = ((y[n + a] + ea) % p + p) % p;
        y[n + b] = ((y[n + b] + eb) % p + p) % p;
        return y;
    };
    Elem id(static_cast<std::size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<Elem> seen{id};
    std::vector<Elem> frontier{id};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const auto& x : frontier) {
            for (int i = 0; i + 1 < n; ++i) {
                Elem y = apply(x, i, i + 1, 0, 0);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
            Elem y = apply(x, 0, n - 1, 1, -1);
            if (seen.insert(y).second) next.push_back(std::move(y));
        }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace reflektor
