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

#include "reflektor/rational.hpp"
#include "reflektor/upoly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace reflektor {

/// Variables of the symbolic layer; gamma is always l*m.
enum class Var : int { alpha = 0, beta = 1, l = 2, m = 3 };

/// Sparse polynomial over Q in alpha, beta, l, m with graded-lex term order.
class MPoly {
public:
    using Exps = std::array<int, 4>;
    using Term = std::pair<std::uint64_t, Rational>;

    MPoly() = default;
    MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit MPoly(const Rational& c);
    static MPoly var(Var v);
    static MPoly monomial(const Exps& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    int degree_in(Var v) const;
    /// Coefficient of v^i viewed as a polynomial in v.
    MPoly coeff_in(Var v, int i) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rational& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
    friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned e) const;
    Rational eval(const std::array<Rational, 4>& point) const;

    template <class T>
    T eval_in(const std::array<T, 4>& point, const T& one) const {
        T acc = one * Rational(0);
        for (const auto& [key, c] : terms_) {
            Exps e = unpack(key);
            T t = one * c;
            for (int v = 0; v < 4; ++v)
                for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) t = t * point[static_cast<std::size_t>(v)];
            acc = acc + t;
        }
        return acc;
    }

    std::string to_string() const;

    static std::uint64_t pack(const Exps& e);
    static Exps unpack(std::uint64_t key);

private:
    explicit MPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
    std::vector<Term> terms_;  // ascending key order, no zero coefficients
};

/// u-polynomial evaluated at a symbolic argument.
MPoly upoly_at(const UPoly& p, const MPoly& x);

/// True iff P is divisible by a*v + b, where a, b do not involve v.
bool divisible_by_linear(const MPoly& P, Var v, const MPoly& a, const MPoly& b);

inline bool is_zero_value(const MPoly& p) { return p.is_zero(); }
inline MPoly one_like(const MPoly&) { return MPoly(1); }
/// Only nonzero constants are units.
MPoly invert_scalar(const MPoly& p);
inline void append_entry_key(std::string& out, const MPoly& p) { out += p.to_string(); }

}  // namespace reflektor
