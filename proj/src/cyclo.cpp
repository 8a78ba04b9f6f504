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

#include "reflektor/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <algorithm>
#include <stdexcept>

namespace reflektor {

namespace {

std::unique_ptr<FieldCtx> make_ctx(long N) {
    auto ctx = std::make_unique<FieldCtx>();
    ctx->N = N;
    ctx->modulus = cyclotomic(N);
    ctx->deg = ctx->modulus.degree();
    const long d = ctx->deg;
    std::vector<long> phi(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) phi[static_cast<std::size_t>(i)] = ctx->modulus.coeff(static_cast<int>(i)).num().get_si();
    std::vector<long> cur(static_cast<std::size_t>(d), 0);
    cur[0] = 1;
    for (long e = 0; e < N; ++e) {
        ctx->pow_table.push_back(cur);
        long top = cur[static_cast<std::size_t>(d - 1)];
        for (long i = d - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        for (long i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] -= top * phi[static_cast<std::size_t>(i)];
    }
    return ctx;
}

// s with s * a = 1 mod m
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    UPoly r0 = m, r1 = a, s0, s1 = UPoly{1};
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::domain_error("element is not invertible");
    return s0 * r0.coeff(0).inverse();
}

}  // namespace

const FieldCtx& field_ctx(long N) {
    if (N < 1) throw std::invalid_argument("conductor must be >= 1");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<FieldCtx>> registry;
    std::lock_guard<std::mutex> lk(mu);
    auto it = registry.find(N);
    if (it == registry.end()) it = registry.emplace(N, make_ctx(N)).first;
    return *it->second;
}

CycloElem::CycloElem(const FieldCtx& ctx) : ctx_(&ctx), num_(static_cast<std::size_t>(ctx.deg)) {}

CycloElem::CycloElem(const FieldCtx& ctx, const Rational& r) : CycloElem(ctx) {
    num_[0] = r.num();
    den_ = r.den();
}

CycloElem CycloElem::zeta(const FieldCtx& ctx, long power) {
    long e = ((power % ctx.N) + ctx.N) % ctx.N;
    CycloElem z(ctx);
    const auto& row = ctx.pow_table[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < row.size(); ++i) z.num_[i] = row[i];
    return z;
}

CycloElem CycloElem::from_upoly(const FieldCtx& ctx, const UPoly& p) {
    CycloElem out(ctx);
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (!c.is_zero()) out += zeta(ctx, i) * c;
    }
    return out;
}

void CycloElem::normalize() {
    if (den_ == 1) return;
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g == 1) return;
    den_ /= g;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

bool CycloElem::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool CycloElem::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

bool CycloElem::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

Rational CycloElem::rational_value() const {
    if (!is_rational()) throw std::logic_error("element is not rational");
    return Rational::make(num_[0], den_);
}

Rational CycloElem::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(num_.size())) return Rational(0);
    return Rational::make(num_[static_cast<std::size_t>(i)], den_);
}

UPoly CycloElem::to_upoly() const {
    std::vector<Rational> c;
    for (const auto& n : num_) c.push_back(Rational::make(n, den_));
    return UPoly(std::move(c));
}

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

static void check_same(const CycloElem& a, const CycloElem& b) {
    if (&a.ctx() != &b.ctx()) throw std::invalid_argument("mismatched field contexts");
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    check_same(*this, o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) { return *this += -o; }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    check_same(a, b);
    const FieldCtx& ctx = *a.ctx_;
    const std::size_t d = static_cast<std::size_t>(ctx.deg);
    CycloElem out(ctx);
    std::vector<mpz_class> conv(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.num_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.num_[j] != 0) mpz_addmul(conv[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    for (std::size_t k = 0; k < d; ++k) out.num_[k] = std::move(conv[k]);
    for (std::size_t k = d; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const auto& row = ctx.pow_table[k % static_cast<std::size_t>(ctx.N)];
        for (std::size_t t = 0; t < d; ++t) {
            long r = row[t];
            if (r > 0) mpz_addmul_ui(out.num_[t].get_mpz_t(), conv[k].get_mpz_t(), static_cast<unsigned long>(r));
            else if (r < 0) mpz_submul_ui(out.num_[t].get_mpz_t(), conv[k].get_mpz_t(), static_cast<unsigned long>(-r));
        }
    }
    out.den_ = a.den_ * b.den_;
    out.normalize();
    return out;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) { return *this = *this * o; }

CycloElem& CycloElem::operator*=(const Rational& s) {
    for (auto& c : num_) c *= s.num();
    den_ *= s.den();
    if (s.is_zero()) den_ = 1;
    normalize();
    return *this;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    if (a.ctx_ != b.ctx_) return false;
    return a.den_ == b.den_ && a.num_ == b.num_;
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return CycloElem(*ctx_, rational_value().inverse());
    return from_upoly(*ctx_, inverse_mod(to_upoly(), ctx_->modulus));
}

CycloElem CycloElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElem r(*ctx_, Rational(1)), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

CycloElem CycloElem::galois(long j) const {
    const long N = ctx_->N;
    long jj = ((j % N) + N) % N;
    if (gcd_l(jj, N) != 1 && N > 1) throw std::invalid_argument("galois exponent not coprime to conductor");
    CycloElem out(*ctx_);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const auto& row = ctx_->pow_table[static_cast<std::size_t>((static_cast<long>(i) * jj) % N)];
        for (std::size_t t = 0; t < row.size(); ++t)
            if (row[t]) out.num_[t] += num_[i] * row[t];
    }
    out.den_ = den_;
    out.normalize();
    return out;
}

CycloElem CycloElem::lift(const FieldCtx& target) const {
    if (&target == ctx_) return *this;
    if (target.N % ctx_->N) throw std::invalid_argument("lift target conductor must be a multiple");
    const long step = target.N / ctx_->N;
    CycloElem out(target);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const auto& row = target.pow_table[static_cast<std::size_t>((static_cast<long>(i) * step) % target.N)];
        for (std::size_t t = 0; t < row.size(); ++t)
            if (row[t]) out.num_[t] += num_[i] * row[t];
    }
    out.den_ = den_;
    out.normalize();
    return out;
}

std::complex<double> CycloElem::embed(long j) const {
    std::complex<double> acc = 0;
    const double base = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(ctx_->N);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        acc += num_[i].get_d() * std::polar(1.0, base * static_cast<double>(i));
    }
    return acc / den_.get_d();
}

void CycloElem::append_key(std::string& out) const {
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (i) out += ',';
        if (num_[i] != 0) out += num_[i].get_str(36);
    }
    if (den_ != 1) {
        out += '/';
        out += den_.get_str(36);
    }
}

std::string CycloElem::to_string() const { return to_upoly().to_string("z" + std::to_string(ctx_->N)); }

std::pair<CycloElem, CycloElem> common_field(const CycloElem& a, const CycloElem& b) {
    const FieldCtx& ctx = field_ctx(lcm_l(a.conductor(), b.conductor()));
    return {a.lift(ctx), b.lift(ctx)};
}

Rational galois_norm(const CycloElem& x) {
    const long N = x.conductor();
    CycloElem acc(x.ctx(), Rational(1));
    for (long j = 1; j <= std::max(1L, N); ++j)
        if (gcd_l(j, N) == 1) acc *= x.galois(j);
    return acc.rational_value();
}

static void check_root_args(long n, long k) {
    if (n < 3) throw std::invalid_argument("root_of_v requires n >= 3");
    if (k < 1 || 2 * k >= n || gcd_l(k, n) != 1) throw std::invalid_argument("root index must satisfy 1 <= k < n/2, gcd(k, n) = 1");
}

CycloElem root_of_v(long n, long k) {
    check_root_args(n, k);
    const FieldCtx& ctx = field_ctx(n);
    return CycloElem::zeta(ctx, k) + CycloElem::zeta(ctx, -k) + CycloElem(ctx, Rational(2));
}

CycloElem sqrt_root(long r, long k) {
    check_root_args(r, k);
    const FieldCtx& ctx = field_ctx(2 * r);
    return CycloElem::zeta(ctx, k) + CycloElem::zeta(ctx, -k);
}

CycloElem named_constant(const std::string& name) {
    if (name == "tau") return root_of_v(5, 1);
    if (name == "omega") return CycloElem::zeta(field_ctx(3), 1);
    if (name == "i") return CycloElem::zeta(field_ctx(4), 1);
    if (name == "sqrt2") return sqrt_root(4, 1);
    if (name == "zeta7_half") {
        const FieldCtx& ctx = field_ctx(7);
        CycloElem g(ctx);
        for (long a = 1; a < 7; ++a) {
            bool residue = a == 1 || a == 2 || a == 4;
            g += residue ? CycloElem::zeta(ctx, a) : -CycloElem::zeta(ctx, a);
        }
        return (g + CycloElem(ctx, Rational(1))) * Rational::make(1, 2);
    }
    if (name.rfind("gamma:", 0) == 0) {
        auto p = name.find(':', 6);
        if (p != std::string::npos) return root_of_v(std::stol(name.substr(6, p - 6)), std::stol(name.substr(p + 1)));
    }
    throw std::invalid_argument("unknown constant: " + name);
}

CycloElem eval_at(const UPoly& p, const CycloElem& x) {
    return p.eval_in(x, CycloElem(x.ctx(), Rational(1)));
}

QuadExtElem quad_mul(const QuadExtElem& a, const QuadExtElem& b) {
    QuadExtElem r{a.phi, a.sign, {}, {}};
    CycloElem yy = a.y * b.y;
    r.x = a.x * b.x + yy * Rational(a.sign);
    r.y = a.x * b.y + b.x * a.y + a.phi * yy;
    return r;
}

QuadExtElem quad_pow(const CycloElem& phi, int sign, long n) {
    const FieldCtx& ctx = phi.ctx();
    CycloElem zero(ctx), one(ctx, Rational(1));
    QuadExtElem base{phi, sign, zero, one};
    if (n < 0) {
        // a^-1 = sign * (a - phi)
        base.x = -phi * Rational(sign);
        base.y = one * Rational(sign);
        n = -n;
    }
    QuadExtElem acc{phi, sign, one, zero};
    while (n) {
        if (n & 1) acc = quad_mul(acc, base);
        n >>= 1;
        if (n) base = quad_mul(base, base);
    }
    return acc;
}

QuadExtElem quad_pow_closed(const CycloElem& phi, int sign, long n) {
    const bool even = n % 2 == 0;
    const long h = even ? n / 2 : (n - 1) / 2;
    CycloElem sq = phi * phi;
    QuadExtElem r{phi, sign, {}, {}};
    if (sign < 0) {
        if (even) {
            r.y = phi * eval_at(u_poly(n), sq);
            r.x = -eval_at(u_poly(n - 1), sq);
        } else {
            r.y = eval_at(u_poly(n), sq);
            r.x = -(phi * eval_at(u_poly(n - 1), sq));
        }
        return r;
    }
    CycloElem nsq = -sq;
    Rational s_hm1((h - 1) % 2 == 0 ? 1 : -1);
    Rational s_h(h % 2 == 0 ? 1 : -1);
    if (even) {
        r.y = phi * eval_at(u_poly(n), nsq) * s_hm1;
        r.x = eval_at(u_poly(n - 1), nsq) * s_hm1;
    } else {
        r.y = eval_at(u_poly(n), nsq) * s_h;
        r.x = phi * eval_at(u_poly(n - 1), nsq) * s_hm1;
    }
    return r;
}

}  // namespace reflektor
