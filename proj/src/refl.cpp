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

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace reflektor {

DiagramSpec DiagramSpec::from_edges(const FieldCtx& field, int rank, const std::vector<Edge>& edges) {
    if (rank < 2) throw std::invalid_argument("diagram rank must be at least 2");
    DiagramSpec d;
    d.rank = rank;
    d.coeffs.assign(static_cast<std::size_t>(rank), std::vector<CycloElem>(static_cast<std::size_t>(rank), CycloElem(field)));
    for (int i = 0; i < rank; ++i) d.coeffs[i][i] = CycloElem(field, Rational(-2));
    for (const Edge& e : edges) {
        if (e.i < 0 || e.j < 0 || e.i >= rank || e.j >= rank || e.i == e.j)
            throw std::invalid_argument("edge index out of range");
        d.coeffs[e.i][e.j] = e.kij.lift(field);
        d.coeffs[e.j][e.i] = e.kji.lift(field);
    }
    return d;
}

DiagramSpec DiagramSpec::rank3(const CycloElem& alpha, const CycloElem& beta, const CycloElem& l, const CycloElem& m) {
    long n = lcm_l(lcm_l(alpha.conductor(), beta.conductor()), lcm_l(l.conductor(), m.conductor()));
    const FieldCtx& f = field_ctx(n);
    const CycloElem one(f, Rational(1));
    return from_edges(f, 3, {{0, 1, alpha, one}, {0, 2, beta, one}, {1, 2, l, m}});
}

ReflectionRep build_rep(const DiagramSpec& spec, std::string name) {
    ReflectionRep rep;
    rep.name = std::move(name);
    rep.spec = spec;
    const CycloElem one(spec.field(), Rational(1));
    rep.generators = build_generators(spec.coeffs, one);
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
        const FieldMatrix& g = rep.generators[i];
        if (!(g * g).is_identity() || g.det() != -one)
            throw std::invalid_argument("generator s" + std::to_string(i + 1) + " is not a reflection");
    }
    return rep;
}

namespace {

void require_rank3(const ReflectionRep& rep) {
    if (rep.rank() != 3) throw std::invalid_argument("rank-3 representation required");
}

struct Rank3Parts {
    CycloElem sum, cyc12, cyc13;
};

Rank3Parts parts(const ReflectionRep& rep) {
    require_rank3(rep);
    const auto& k = rep.spec.coeffs;
    return {rep.spec.pairing(0, 1) + rep.spec.pairing(0, 2) + rep.spec.pairing(1, 2), k[0][1] * k[1][2] * k[2][0],
            k[0][2] * k[2][1] * k[1][0]};
}

}  // namespace

CycloElem delta(const ReflectionRep& rep) {
    const Rank3Parts p = parts(rep);
    return rep.scalar(8) - p.sum * Rational(2) - p.cyc12 - p.cyc13;
}

std::pair<CycloElem, CycloElem> theta_pair(const ReflectionRep& rep) {
    const Rank3Parts p = parts(rep);
    return {rep.scalar(-4) + p.sum + p.cyc12, rep.scalar(4) - p.sum - p.cyc13};
}

FieldMatrix word_element(const ReflectionRep& rep, const std::vector<int>& word) {
    FieldMatrix m = rep.identity();
    for (int i : word) {
        if (i < 1 || i > rep.rank()) throw std::invalid_argument("generator index out of range: " + std::to_string(i));
        m = m * rep.generators[static_cast<std::size_t>(i - 1)];
    }
    return m;
}

FieldMatrix conjugate(const FieldMatrix& x, const FieldMatrix& w) { return w.inverse() * x * w; }

FieldMatrix s0_element(const ReflectionRep& rep) {
    if (!rep.circuit) throw std::invalid_argument("s0 needs a circuit diagram preset");
    std::vector<int> w;
    for (int i = 2; i < rep.rank(); ++i) w.push_back(i);
    return conjugate(rep.generators[0], word_element(rep, w));
}

CycloElem pair_C_field(const FieldMatrix& s, const FieldMatrix& t) {
    if (!s.is_reflection() || !t.is_reflection()) throw std::invalid_argument("pairing needs two reflections");
    const FieldMatrix id = FieldMatrix::identity(s.dim(), s.unit());
    return ((s - id) * (t - id)).trace();
}

PairingClass classify_pairing(const CycloElem& c, long max_p) {
    PairingClass out;
    if (c.is_zero()) {
        out.order = 2;
        out.k = 1;
        out.text = "C = 0: order 2";
        return out;
    }
    if (c == CycloElem(c.ctx(), Rational(4))) {
        out.affine = true;
        out.text = "C = 4: unipotent product";
        return out;
    }
    const std::complex<double> v = c.embed(1);
    if (std::abs(v.imag()) < 1e-9) {
        for (long p = 3; p <= max_p; ++p)
            for (long k = 1; 2 * k < p; ++k) {
                if (gcd_l(k, p) != 1) continue;
                const double cs = std::cos(static_cast<double>(k) * std::numbers::pi / static_cast<double>(p));
                if (std::abs(v.real() - 4 * cs * cs) > 1e-7) continue;
                auto [a, b] = common_field(c, root_of_v(p, k));
                if (a != b) continue;
                out.order = p;
                out.k = k;
                out.text = "C = 4cos^2(" + std::to_string(k) + "pi/" + std::to_string(p) + "): order " + std::to_string(p);
                return out;
            }
    }
    out.text = "no match for p <= " + std::to_string(max_p);
    return out;
}

}  // namespace reflektor
