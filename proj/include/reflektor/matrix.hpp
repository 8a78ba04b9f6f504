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

#include <stdexcept>
#include <string>
#include <vector>

namespace reflektor {

/// Dense square matrix over a commutative ring T supporting T*Rational.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    SquareMatrix(int n, const T& fill) : n_(n), a_(static_cast<std::size_t>(n * n), fill) {}

    static SquareMatrix identity(int n, const T& one) {
        SquareMatrix m(n, one * Rational(0));
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int dim() const { return n_; }
    T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
    const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
    const std::vector<T>& entries() const { return a_; }

    T zero() const { return a_.front() * Rational(0); }
    T unit() const { return one_like(a_.front()); }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        x.check_dim(y);
        SquareMatrix out(x.n_, x.zero());
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const T& xik = x(i, k);
                if (is_zero_value(xik)) continue;
                for (int j = 0; j < x.n_; ++j) out(i, j) = out(i, j) + xik * y(k, j);
            }
        return out;
    }
    friend SquareMatrix operator+(SquareMatrix x, const SquareMatrix& y) {
        x.check_dim(y);
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = x.a_[i] + y.a_[i];
        return x;
    }
    friend SquareMatrix operator-(SquareMatrix x, const SquareMatrix& y) {
        x.check_dim(y);
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = x.a_[i] - y.a_[i];
        return x;
    }
    friend SquareMatrix operator*(SquareMatrix x, const T& s) {
        for (auto& e : x.a_) e = e * s;
        return x;
    }
    friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
    friend bool operator!=(const SquareMatrix& x, const SquareMatrix& y) { return !(x == y); }

    /// g * M where g differs from the identity only in row i.
    SquareMatrix left_row_mul(const SquareMatrix& g, int i) const {
        SquareMatrix out = *this;
        for (int c = 0; c < n_; ++c) {
            T acc = zero();
            for (int k = 0; k < n_; ++k)
                if (!is_zero_value(g(i, k))) acc = acc + g(i, k) * (*this)(k, c);
            out(i, c) = acc;
        }
        return out;
    }

    /// M * g where g differs from the identity only in row i.
    SquareMatrix right_row_mul(const SquareMatrix& g, int i) const {
        SquareMatrix out = *this;
        for (int r = 0; r < n_; ++r) {
            const T mri = (*this)(r, i);
            out(r, i) = zero();
            if (is_zero_value(mri)) continue;
            for (int c = 0; c < n_; ++c)
                if (!is_zero_value(g(i, c))) out(r, c) = out(r, c) + mri * g(i, c);
        }
        return out;
    }
    T trace() const {
        T t = zero();
        for (int i = 0; i < n_; ++i) t = t + (*this)(i, i);
        return t;
    }

    /// Characteristic polynomial det(X*I - M), ascending coefficients, monic (Faddeev-LeVerrier).
    std::vector<T> charpoly(SquareMatrix* last = nullptr) const {
        const T one_v = unit();
        std::vector<T> c(static_cast<std::size_t>(n_ + 1), zero());
        c[static_cast<std::size_t>(n_)] = one_v;
        SquareMatrix Mk(n_, zero());
        for (int k = 1; k <= n_; ++k) {
            Mk = *this * Mk;
            for (int i = 0; i < n_; ++i) Mk(i, i) = Mk(i, i) + c[static_cast<std::size_t>(n_ - k + 1)];
            c[static_cast<std::size_t>(n_ - k)] = -((*this * Mk).trace() * Rational::make(1, k));
        }
        if (last) *last = Mk;
        return c;
    }

    T det() const {
        T d = charpoly().front();
        return n_ % 2 ? -d : d;
    }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const T& e = (*this)(i, j);
                if (i == j ? !(e == unit()) : !is_zero_value(e)) return false;
            }
        return true;
    }

    /// True iff M = lambda * I; writes lambda.
    bool is_scalar(T* lambda = nullptr) const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i == j ? !((*this)(i, i) == (*this)(0, 0)) : !is_zero_value((*this)(i, j))) return false;
        if (lambda) *lambda = (*this)(0, 0);
        return true;
    }

    /// Involution with a one-dimensional (-1)-eigenspace: M^2 = I and tr(M) = n - 2.
    bool is_reflection() const {
        if (!(*this * *this).is_identity()) return false;
        return trace() == unit() * Rational(n_ - 2);
    }

    /// Inverse via the adjugate from the Faddeev-LeVerrier recursion (T must be a field).
    SquareMatrix inverse() const {
        SquareMatrix adj;
        auto c = charpoly(&adj);
        if (is_zero_value(c[0])) throw std::domain_error("matrix is singular");
        return adj * invert_scalar(-c[0]);
    }

    SquareMatrix pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        SquareMatrix r = identity(n_, unit()), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    std::string key() const {
        std::string k = std::to_string(n_) + "|";
        for (const auto& e : a_) {
            append_entry_key(k, e);
            k += ';';
        }
        return k;
    }

private:
    void check_dim(const SquareMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    }
    int n_ = 0;
    std::vector<T> a_;
};

}  // namespace reflektor
