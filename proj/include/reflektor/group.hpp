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

#include "reflektor/refl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace reflektor {

struct ClosureOptions {
    std::size_t cap = 1000000;
    /// Keep every element (needed for center_order); otherwise only keys are kept.
    bool store_elements = false;
};

struct ClosureResult {
    std::size_t order = 0;
    bool cap_exceeded = false;
    std::size_t generator_count = 0;
    std::unordered_set<std::string> element_keys;
    /// Discovery order; filled when store_elements is set.
    std::vector<FieldMatrix> elements;
    /// Matrices multiplied during the search.
    std::uint64_t products = 0;

    bool complete() const { return !cap_exceeded; }
};

/// Breadth-first closure from the identity under right multiplication (single thread).
ClosureResult closure_serial(const std::vector<FieldMatrix>& gens, const ClosureOptions& opt = {});
/// Same search with each BFS level expanded in parallel; keys and order match closure_serial.
ClosureResult closure_parallel(const std::vector<FieldMatrix>& gens, const ClosureOptions& opt = {});
/// Dispatches to closure_parallel.
ClosureResult closure(const std::vector<FieldMatrix>& gens, const ClosureOptions& opt = {});

/// Least n <= cap with M^n = I.
std::optional<long> element_order(const FieldMatrix& m, long cap = 100000);
/// lambda with M^n = lambda I, if any.
std::optional<CycloElem> scalar_power_check(const FieldMatrix& m, long n);
/// Characteristic polynomial equals (X - 1)^dim.
bool is_unipotent(const FieldMatrix& m);
/// (word)^exponent = I.
bool check_relation(const ReflectionRep& rep, const std::string& word, long exponent);
/// "lhs = rhs" or a bare word meaning word = 1.
bool check_equation(const ReflectionRep& rep, const std::string& equation);
/// Elements commuting with every generator; needs a complete closure with stored elements.
std::size_t center_order(const ClosureResult& closure, const std::vector<FieldMatrix>& gens);

/// Order of the group of n x n monomial matrices generated by the adjacent transpositions and the
/// transposition of coordinates 1 and n with entries zeta_p, zeta_p^-1 (independent of field arithmetic).
std::size_t monomial_closure_order(long p, int n);

}  // namespace reflektor
