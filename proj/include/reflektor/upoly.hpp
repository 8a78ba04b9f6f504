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

#include <string>
#include <utility>
#include <vector>

namespace reflektor {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<long> coeffs);

    static UPoly constant(const Rational& c);
    static UPoly x();
    static UPoly monomial(const Rational& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_integral() const;
    Rational coeff(int i) const;
    const Rational& lead() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rational& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    /// Horner evaluation in any ring T with T * Rational.
    template <class T>
    T eval_in(const T& x, const T& one) const {
        T acc = one * Rational(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + one * (*it);
        return acc;
    }

    /// "X^2 - 3*X + 1"
    std::string to_string(const std::string& var = "X") const;
    static UPoly parse(const std::string& text);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error on zero divisor.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
/// Quotient of an exact division; throws std::logic_error when the remainder is nonzero.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// p(q(X)).
UPoly compose(const UPoly& p, const UPoly& q);
UPoly pow(const UPoly& p, unsigned e);
UPoly derivative(const UPoly& p);

// number theory helpers
std::vector<long> divisors(long n);
int mobius(long n);
long euler_phi(long n);
long gcd_l(long a, long b);
long lcm_l(long a, long b);
/// If n = p^k with p prime and k >= 1 returns p, else 0.
long prime_power_base(long n);

/// u_n for any integer n.
const UPoly& u_poly(long n);
/// Primitive factor v_n, n >= 1.
const UPoly& v_poly(long n);
/// N-th cyclotomic polynomial.
const UPoly& cyclotomic(long n);
long n_prime(long n);
/// Product of the roots: (-1)^deg * constant term. Throws on non-monic input.
Rational theta(const UPoly& p);

}  // namespace reflektor
