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

#include "reflektor/upoly.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace reflektor {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
UPoly UPoly::x() { return UPoly{0, 1}; }

UPoly UPoly::monomial(const Rational& c, int deg) {
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UPoly::is_integral() const {
    for (const auto& c : c_)
        if (!c.is_integer()) return false;
    return true;
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& q : acc) out.emplace_back(q);
    return UPoly(std::move(out));
}

Rational UPoly::eval(const Rational& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x.raw() + it->raw();
    return Rational(acc);
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (i == 0) out += a.to_string();
        else if (a.is_one()) out += mono;
        else out += a.to_string() + "*" + mono;
    }
    return out;
}

UPoly UPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    UPoly out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("malformed polynomial: " + text);
        Rational c(1);
        int deg = 0;
        auto xpos = term.find('X');
        if (xpos == std::string::npos) {
            c = Rational::parse(term);
        } else {
            std::string pre = term.substr(0, xpos);
            if (!pre.empty()) {
                if (pre.back() != '*') throw std::invalid_argument("malformed term: " + term);
                c = Rational::parse(pre.substr(0, pre.size() - 1));
            }
            std::string post = term.substr(xpos + 1);
            if (post.empty()) deg = 1;
            else if (post[0] == '^') deg = std::stoi(post.substr(1));
            else throw std::invalid_argument("malformed term: " + term);
        }
        out += UPoly::monomial(sign < 0 ? -c : c, deg);
        i = j;
    }
    return out;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<mpq_class> r;
    for (const auto& c : a.coeffs()) r.push_back(c.raw());
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {UPoly(), a};
    std::vector<mpq_class> q(static_cast<std::size_t>(da - db + 1));
    mpq_class lb = b.lead().raw();
    bool monic = lb == 1;
    for (int k = da; k >= db; --k) {
        mpq_class& top = r[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        mpq_class f = monic ? mpq_class(top) : mpq_class(top / lb);
        q[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)].raw();
    }
    std::vector<Rational> qq, rr;
    for (auto& x : q) qq.emplace_back(x);
    for (auto& x : r) rr.emplace_back(x);
    return {UPoly(std::move(qq)), UPoly(std::move(rr))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

UPoly compose(const UPoly& p, const UPoly& q) {
    UPoly acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + UPoly::constant(p.coeff(i));
    return acc;
}

UPoly pow(const UPoly& p, unsigned e) {
    UPoly r = UPoly::constant(Rational(1)), b = p;
    while (e) {
        if (e & 1U) r = r * b;
        e >>= 1U;
        if (e) b = b * b;
    }
    return r;
}

UPoly derivative(const UPoly& p) {
    std::vector<Rational> out;
    for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeff(i) * Rational(i));
    return UPoly(std::move(out));
}

std::vector<long> divisors(long n) {
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

int mobius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

long gcd_l(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_l(long a, long b) { return a / gcd_l(a, b) * b; }

long prime_power_base(long n) {
    if (n < 2) return 0;
    long p = 2;
    while (p * p <= n && n % p) ++p;
    if (n % p) p = n;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

namespace {

struct PolyCaches {
    std::mutex mu;
    std::deque<UPoly> u_pos{UPoly(), UPoly{1}, UPoly{1}};
    std::map<long, UPoly> u_neg;
    std::map<long, UPoly> v;
    std::map<long, UPoly> phi;
};

PolyCaches& caches() {
    static PolyCaches c;
    return c;
}

const UPoly& u_locked(PolyCaches& c, long n) {
    if (n < 0) {
        auto it = c.u_neg.find(n);
        if (it != c.u_neg.end()) return it->second;
        UPoly neg = -u_locked(c, -n);
        return c.u_neg.emplace(n, std::move(neg)).first->second;
    }
    while (static_cast<long>(c.u_pos.size()) <= n) {
        long k = static_cast<long>(c.u_pos.size());
        const UPoly& a = c.u_pos[static_cast<std::size_t>(k - 1)];
        const UPoly& b = c.u_pos[static_cast<std::size_t>(k - 2)];
        // even index: u_{2j} = u_{2j-1} - u_{2j-2}; odd index: u_{2j+1} = X u_{2j} - u_{2j-1}
        UPoly next = (k % 2 == 0) ? a - b : UPoly::x() * a - b;
        c.u_pos.push_back(std::move(next));
    }
    return c.u_pos[static_cast<std::size_t>(n)];
}

const UPoly& v_locked(PolyCaches& c, long n) {
    auto it = c.v.find(n);
    if (it != c.v.end()) return it->second;
    UPoly out;
    if (n <= 2) {
        out = UPoly{1};
    } else {
        UPoly denom{1};
        for (long d : divisors(n))
            if (d != n) denom = denom * v_locked(c, d);
        out = exact_div(u_locked(c, n), denom);
    }
    return c.v.emplace(n, std::move(out)).first->second;
}

}  // namespace

const UPoly& u_poly(long n) {
    auto& c = caches();
    std::lock_guard<std::mutex> lk(c.mu);
    return u_locked(c, n);
}

const UPoly& v_poly(long n) {
    if (n < 1) throw std::invalid_argument("v_poly requires n >= 1");
    auto& c = caches();
    std::lock_guard<std::mutex> lk(c.mu);
    return v_locked(c, n);
}

const UPoly& cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic requires n >= 1");
    auto& c = caches();
    std::lock_guard<std::mutex> lk(c.mu);
    auto it = c.phi.find(n);
    if (it != c.phi.end()) return it->second;
    UPoly num{1}, den{1};
    for (long d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        UPoly f = UPoly::monomial(Rational(1), static_cast<int>(d)) - UPoly{1};
        (mu > 0 ? num : den) = (mu > 0 ? num : den) * f;
    }
    return c.phi.emplace(n, exact_div(num, den)).first->second;
}

long n_prime(long n) {
    if (n < 1) throw std::invalid_argument("n_prime requires n >= 1");
    if (n % 2) return 2 * n;
    if (n % 4 == 2) return n / 2;
    return n;
}

Rational theta(const UPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("theta requires a monic polynomial");
    Rational c = p.coeff(0);
    return p.degree() % 2 ? -c : c;
}

}  // namespace reflektor
