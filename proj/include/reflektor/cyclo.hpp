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

#include <complex>
#include <string>
#include <vector>

namespace reflektor {

/// Q(zeta_N) presented as Q[X]/(Phi_N).
struct FieldCtx {
    long N = 1;
    long deg = 1;
    UPoly modulus;
    /// pow_table[e] = coefficients of X^e mod Phi_N, 0 <= e < N (all integral).
    std::vector<std::vector<long>> pow_table;
};

/// Shared, immutable context for conductor N (thread-safe registry).
const FieldCtx& field_ctx(long N);

/// Element of a cyclotomic field: integer numerators over one positive common denominator.
class CycloElem {
public:
    CycloElem() = default;
    explicit CycloElem(const FieldCtx& ctx);
    CycloElem(const FieldCtx& ctx, const Rational& r);

    static CycloElem zeta(const FieldCtx& ctx, long power = 1);
    static CycloElem from_upoly(const FieldCtx& ctx, const UPoly& p);

    const FieldCtx& ctx() const { return *ctx_; }
    long conductor() const { return ctx_ ? ctx_->N : 0; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;
    UPoly to_upoly() const;
    Rational coeff(long i) const;

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    CycloElem& operator*=(const Rational& s);
    CycloElem& operator/=(const CycloElem& o) { return *this *= o.inverse(); }
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
    friend CycloElem operator*(const Rational& s, CycloElem a) { return a *= s; }
    friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
    friend bool operator==(const CycloElem& a, const CycloElem& b);
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    /// Throws std::domain_error on zero.
    CycloElem inverse() const;
    CycloElem pow(long e) const;
    /// zeta -> zeta^j, gcd(j, N) = 1.
    CycloElem galois(long j) const;
    /// Complex conjugation (j = -1).
    CycloElem conj() const { return galois(-1); }
    /// Image in Q(zeta_M), N | M, zeta_N -> zeta_M^(M/N).
    CycloElem lift(const FieldCtx& target) const;
    /// Numeric value under zeta -> exp(2 pi i j / N).
    std::complex<double> embed(long j = 1) const;

    /// Canonical text "N:c0,c1,.../den" used for hashing matrix entries.
    void append_key(std::string& out) const;
    /// Human readable polynomial in z = zeta_N.
    std::string to_string() const;

private:
    void normalize();
    const FieldCtx* ctx_ = nullptr;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

/// Lifts both operands to Q(zeta_lcm).
std::pair<CycloElem, CycloElem> common_field(const CycloElem& a, const CycloElem& b);

/// Product of all Galois conjugates.
Rational galois_norm(const CycloElem& x);

/// zeta_n^k + zeta_n^-k + 2 in Q(zeta_n); requires n >= 3, gcd(k, n) = 1, 1 <= k < n/2.
CycloElem root_of_v(long n, long k);
/// zeta_2r^k + zeta_2r^-k in Q(zeta_2r); same preconditions on (r, k).
CycloElem sqrt_root(long r, long k);

/// "tau", "omega", "zeta7_half", "i", "sqrt2", or "gamma:n:k".
CycloElem named_constant(const std::string& name);

/// Evaluates a polynomial at a field element.
CycloElem eval_at(const UPoly& p, const CycloElem& x);

/// x + y*a with a^2 = phi*a + sign.
struct QuadExtElem {
    CycloElem phi;
    int sign = 1;
    CycloElem x;  // constant part
    CycloElem y;  // coefficient of a
};

QuadExtElem quad_mul(const QuadExtElem& a, const QuadExtElem& b);
/// a^n = y*a + x, computed by repeated squaring (negative n via the inverse of a).
QuadExtElem quad_pow(const CycloElem& phi, int sign, long n);
/// Closed form for a^n from the u-polynomials.
QuadExtElem quad_pow_closed(const CycloElem& phi, int sign, long n);

inline bool is_zero_value(const CycloElem& x) { return x.is_zero(); }
inline CycloElem one_like(const CycloElem& x) { return CycloElem(x.ctx(), Rational(1)); }
inline CycloElem invert_scalar(const CycloElem& x) { return x.inverse(); }
inline void append_entry_key(std::string& out, const CycloElem& x) { x.append_key(out); }

}  // namespace reflektor
