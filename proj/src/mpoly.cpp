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

#include "reflektor/mpoly.hpp"

#include <map>
#include <stdexcept>

namespace reflektor {

namespace {
constexpr int kBits = 12;
constexpr std::uint64_t kMask = (1ULL << kBits) - 1;
const char* kNames[4] = {"a", "b", "l", "m"};
}  // namespace

std::uint64_t MPoly::pack(const Exps& e) {
    std::uint64_t total = 0, key = 0;
    for (int v = 0; v < 4; ++v) {
        auto x = static_cast<std::uint64_t>(e[static_cast<std::size_t>(v)]);
        if (x > kMask) throw std::overflow_error("exponent too large");
        total += x;
        key |= x << (kBits * (3 - v));
    }
    return key | (total << (4 * kBits));
}

MPoly::Exps MPoly::unpack(std::uint64_t key) {
    Exps e{};
    for (int v = 0; v < 4; ++v) e[static_cast<std::size_t>(v)] = static_cast<int>((key >> (kBits * (3 - v))) & kMask);
    return e;
}

MPoly::MPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(0, c);
}

MPoly MPoly::var(Var v) {
    Exps e{};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(e, Rational(1));
}

MPoly MPoly::monomial(const Exps& e, const Rational& c) {
    if (c.is_zero()) return {};
    return MPoly(std::vector<Term>{{pack(e), c}});
}

int MPoly::degree_in(Var v) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, unpack(t.first)[static_cast<std::size_t>(v)]);
    return d;
}

MPoly MPoly::coeff_in(Var v, int i) const {
    std::map<std::uint64_t, Rational> acc;
    for (const auto& [key, c] : terms_) {
        Exps e = unpack(key);
        if (e[static_cast<std::size_t>(v)] != i) continue;
        e[static_cast<std::size_t>(v)] = 0;
        acc.emplace(pack(e), c);
    }
    return MPoly(std::vector<Term>(acc.begin(), acc.end()));
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.cbegin();
    auto j = o.terms_.cbegin();
    while (i != terms_.cend() || j != o.terms_.cend()) {
        if (j == o.terms_.cend() || (i != terms_.cend() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == terms_.cend() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            Rational s = i->second + j->second;
            if (!s.is_zero()) out.emplace_back(i->first, s);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<std::uint64_t, mpq_class> acc;
    for (const auto& [ka, ca] : a.terms_) {
        MPoly::Exps ea = MPoly::unpack(ka);
        for (const auto& [kb, cb] : b.terms_) {
            MPoly::Exps eb = MPoly::unpack(kb);
            MPoly::Exps e{};
            for (std::size_t v = 0; v < 4; ++v) e[v] = ea[v] + eb[v];
            acc[MPoly::pack(e)] += ca.raw() * cb.raw();
        }
    }
    std::vector<MPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [k, q] : acc)
        if (sgn(q) != 0) out.emplace_back(k, Rational(q));
    return MPoly(std::move(out));
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(1), b = *this;
    while (e) {
        if (e & 1U) r = r * b;
        e >>= 1U;
        if (e) b = b * b;
    }
    return r;
}

Rational MPoly::eval(const std::array<Rational, 4>& point) const {
    return eval_in<Rational>(point, Rational(1));
}

std::string MPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        Exps e = unpack(key);
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        for (int v = 0; v < 4; ++v) {
            int x = e[static_cast<std::size_t>(v)];
            if (!x) continue;
            if (!mono.empty()) mono += "*";
            mono += kNames[v];
            if (x > 1) mono += "^" + std::to_string(x);
        }
        if (mono.empty()) out += a.to_string();
        else if (a.is_one()) out += mono;
        else out += a.to_string() + "*" + mono;
    }
    return out;
}

MPoly upoly_at(const UPoly& p, const MPoly& x) { return p.eval_in(x, MPoly(1)); }

bool divisible_by_linear(const MPoly& P, Var v, const MPoly& a, const MPoly& b) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) throw std::invalid_argument("divisor must be linear in the variable");
    if (a.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
    const int d = P.degree_in(v);
    if (d < 0) return true;
    // a^d * P(-b/a) = sum_i c_i (-b)^i a^(d-i)
    MPoly nb = -b, acc;
    std::vector<MPoly> apow{MPoly(1)};
    for (int i = 1; i <= d; ++i) apow.push_back(apow.back() * a);
    MPoly bpow(1);
    for (int i = 0; i <= d; ++i) {
        MPoly c = P.coeff_in(v, i);
        if (!c.is_zero()) acc += c * bpow * apow[static_cast<std::size_t>(d - i)];
        bpow = bpow * nb;
    }
    return acc.is_zero();
}

MPoly invert_scalar(const MPoly& p) {
    if (p.size() != 1 || p.terms().front().first != 0) throw std::domain_error("polynomial is not a unit");
    return MPoly(p.terms().front().second.inverse());
}

}  // namespace reflektor
