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

#pragma once

#include "reflektor/cyclo.hpp"
#include "reflektor/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reflektor {

using FieldMatrix = SquareMatrix<CycloElem>;

/// Generator matrices from a coefficient array (diagonal ignored, taken as -2).
/// Generator i is the identity with row i replaced by (k_i0, ..., -1, ..., k_i,n-1).
template <class T>
std::vector<SquareMatrix<T>> build_generators(const std::vector<std::vector<T>>& k, const T& one) {
    const int n = static_cast<int>(k.size());
    std::vector<SquareMatrix<T>> gens;
    for (int i = 0; i < n; ++i) {
        SquareMatrix<T> g = SquareMatrix<T>::identity(n, one);
        for (int j = 0; j < n; ++j) g(i, j) = i == j ? -one : k[i][j];
        gens.push_back(std::move(g));
    }
    return gens;
}

/// One diagram edge; s_i(a_j) = a_j + kij a_i and s_j(a_i) = a_i + kji a_j (0-based).
struct Edge {
    int i = 0;
    int j = 0;
    CycloElem kij;
    CycloElem kji;
};

struct DiagramSpec {
    int rank = 0;
    /// rank x rank, diagonal -2.
    std::vector<std::vector<CycloElem>> coeffs;

    static DiagramSpec from_edges(const FieldCtx& field, int rank, const std::vector<Edge>& edges);
    /// R(alpha, beta, l*m; l) with edges (1,2) = (alpha, 1), (1,3) = (beta, 1), (2,3) = (l, m).
    static DiagramSpec rank3(const CycloElem& alpha, const CycloElem& beta, const CycloElem& l, const CycloElem& m);

    const FieldCtx& field() const { return coeffs.at(0).at(0).ctx(); }
    /// k_ij * k_ji.
    CycloElem pairing(int i, int j) const { return coeffs[i][j] * coeffs[j][i]; }
};

struct ReflectionRep {
    std::string name;
    DiagramSpec spec;
    std::vector<FieldMatrix> generators;
    /// Set for circuit diagrams s_1 - ... - s_n - s_1, where s0 is defined.
    bool circuit = false;

    int rank() const { return spec.rank; }
    long conductor() const { return spec.field().N; }
    const FieldCtx& field() const { return spec.field(); }
    CycloElem scalar(const Rational& r) const { return CycloElem(field(), r); }
    FieldMatrix identity() const { return FieldMatrix::identity(rank(), scalar(1)); }
};

/// Throws std::invalid_argument when a generator is not an involution of determinant -1.
ReflectionRep build_rep(const DiagramSpec& spec, std::string name = {});

/// 8 - 2(alpha + beta + gamma) - (k12 k23 k31 + k13 k32 k21); rank 3 only.
CycloElem delta(const ReflectionRep& rep);
/// (theta, theta'), with theta' - theta = delta.
std::pair<CycloElem, CycloElem> theta_pair(const ReflectionRep& rep);

/// Product of generators in written order; indices are 1-based.
FieldMatrix word_element(const ReflectionRep& rep, const std::vector<int>& word);
/// s_1 conjugated by s_2 ... s_{n-1}; circuit reps only.
FieldMatrix s0_element(const ReflectionRep& rep);

/// x^w = w^-1 x w.
FieldMatrix conjugate(const FieldMatrix& x, const FieldMatrix& w);

/// tr((s - I)(t - I)); throws std::invalid_argument unless both are reflections.
CycloElem pair_C_field(const FieldMatrix& s, const FieldMatrix& t);

/// Order predicted for st from C(s, t) = 4cos^2(k pi / p), p <= max_p.
struct PairingClass {
    std::optional<long> order;
    long k = 0;
    /// C = 4: st is unipotent when nontrivial.
    bool affine = false;
    std::string text;
};
PairingClass classify_pairing(const CycloElem& c, long max_p = 60);

/// Catalog of fixed preset names (parameterized families listed as patterns).
std::vector<std::string> preset_names();
std::vector<std::string> preset_families();
/// Fixed names or "gppn:p:n", "gnn3:n:k", "atilde:n", "wppr:p:r:k", "coxeter3:p:q:r".
ReflectionRep preset(const std::string& name);
/// Versioned JSON description of the catalog.
std::string catalog_json();

}  // namespace reflektor
