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

#include "reflektor/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace reflektor {

namespace {

const UPoly& U(long n) { return u_poly(n); }
UPoly X() { return UPoly::x(); }
UPoly Y() { return UPoly{4, -1}; }
UPoly K(long c) { return UPoly{c}; }
bool even(long n) { return n % 2 == 0; }
bool odd(long n) { return n % 2 != 0; }
long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
UPoly sgn_pow(long e) { return K(even(e) ? 1 : -1); }

using Sides = std::pair<UPoly, UPoly>;
auto any1 = [](long, long) { return true; };

std::vector<IdentitySpec> build_catalog() {
    using T = IdentityTag;
    std::vector<IdentitySpec> v;
    auto add = [&](T tag, std::string name, int arity, std::string st, std::function<bool(long, long)> adm,
                   std::function<Sides(long, long)> sides, long bound = 30) {
        v.push_back({tag, std::move(name), arity, std::move(st), std::move(adm), std::move(sides), bound});
    };

    add(T::recur_even_step, "recur_even_step", 1, "u[2n+2] - u[2n+1] + u[2n] = 0", any1,
        [](long n, long) -> Sides { return {U(2 * n + 2) - U(2 * n + 1) + U(2 * n), {}}; }, 50);
    add(T::recur_odd_step, "recur_odd_step", 1, "u[2n+1] - X u[2n] + u[2n-1] = 0", any1,
        [](long n, long) -> Sides { return {U(2 * n + 1) - X() * U(2 * n) + U(2 * n - 1), {}}; }, 50);
    add(T::recurrence, "recurrence", 1, "u[n+4] - (X-2) u[n+2] + u[n] = 0", any1,
        [](long n, long) -> Sides { return {U(n + 4) - UPoly{-2, 1} * U(n + 2) + U(n), {}}; }, 50);

    add(T::shift_sum_even, "shift_sum_even", 2, "u[n+2m] + u[n-2m] = (u[2m+1] - u[2m-1]) u[n]", any1,
        [](long n, long m) -> Sides {
            return {U(n + 2 * m) + U(n - 2 * m), (U(2 * m + 1) - U(2 * m - 1)) * U(n)};
        });
    add(T::shift_sum_odd_at_even, "shift_sum_odd_at_even", 2,
        "n even: u[n+2m+1] + u[n-2m-1] = X (u[2m+2] - u[2m]) u[n]", [](long n, long) { return even(n); },
        [](long n, long m) -> Sides {
            return {U(n + 2 * m + 1) + U(n - 2 * m - 1), X() * (U(2 * m + 2) - U(2 * m)) * U(n)};
        });
    add(T::shift_sum_odd_at_odd, "shift_sum_odd_at_odd", 2,
        "n odd: u[n+2m+1] + u[n-2m-1] = (u[2m+2] - u[2m]) u[n]", [](long n, long) { return odd(n); },
        [](long n, long m) -> Sides {
            return {U(n + 2 * m + 1) + U(n - 2 * m - 1), (U(2 * m + 2) - U(2 * m)) * U(n)};
        });

    add(T::double_product, "double_product", 1, "u[2n] = (u[n+1] - u[n-1]) u[n]", any1,
        [](long n, long) -> Sides { return {U(2 * n), (U(n + 1) - U(n - 1)) * U(n)}; });
    add(T::double_minus, "double_minus", 1, "u[2n] = u[n+1] (u[n] - u[n-2]) - 1", any1,
        [](long n, long) -> Sides { return {U(2 * n), U(n + 1) * (U(n) - U(n - 2)) - K(1)}; });
    add(T::double_plus, "double_plus", 1, "u[2n] = u[n-1] (u[n+2] - u[n]) + 1", any1,
        [](long n, long) -> Sides { return {U(2 * n), U(n - 1) * (U(n + 2) - U(n)) + K(1)}; });
    add(T::double_odd_at_even_a, "double_odd_at_even_a", 1, "n even: u[2n+1] = u[n+1] (u[n+1] - u[n-1]) - 1",
        [](long n, long) { return even(n); },
        [](long n, long) -> Sides { return {U(2 * n + 1), U(n + 1) * (U(n + 1) - U(n - 1)) - K(1)}; });
    add(T::double_odd_at_even_b, "double_odd_at_even_b", 1, "n even: u[2n+1] = X u[n] (u[n+2] - u[n]) + 1",
        [](long n, long) { return even(n); },
        [](long n, long) -> Sides { return {U(2 * n + 1), X() * U(n) * (U(n + 2) - U(n)) + K(1)}; });
    add(T::double_odd_at_odd_a, "double_odd_at_odd_a", 1, "n odd: u[2n+1] = X u[n+1] (u[n+1] - u[n-1]) - 1",
        [](long n, long) { return odd(n); },
        [](long n, long) -> Sides { return {U(2 * n + 1), X() * U(n + 1) * (U(n + 1) - U(n - 1)) - K(1)}; });
    add(T::double_odd_at_odd_b, "double_odd_at_odd_b", 1, "n odd: u[2n+1] = u[n] (u[n+2] - u[n]) + 1",
        [](long n, long) { return odd(n); },
        [](long n, long) -> Sides { return {U(2 * n + 1), U(n) * (U(n + 2) - U(n)) + K(1)}; });

    add(T::reflect_even, "reflect_even", 1, "u[2n](X) = (-1)^(n-1) u[2n](4-X)", any1,
        [](long n, long) -> Sides { return {U(2 * n), sgn_pow(n - 1) * compose(U(2 * n), Y())}; });
    add(T::reflect_square, "reflect_square", 1, "p odd: u[2p](X) = (-1)^((p-1)/2) u[p](X) u[p](4-X)",
        [](long p, long) { return odd(p); },
        [](long p, long) -> Sides {
            return {U(2 * p), sgn_pow(floor_div(p - 1, 2)) * U(p) * compose(U(p), Y())};
        });

    add(T::split_even, "split_even", 2, "u[2n] = u[p] u[2n+1-p] - u[p-1] u[2n-p]", any1,
        [](long n, long p) -> Sides { return {U(2 * n), U(p) * U(2 * n + 1 - p) - U(p - 1) * U(2 * n - p)}; });
    add(T::split_odd_a, "split_odd_a", 2, "u[2n+1] = u[2p+1] u[2n+1-2p] - X u[2p] u[2n-2p]", any1,
        [](long n, long p) -> Sides {
            return {U(2 * n + 1), U(2 * p + 1) * U(2 * n + 1 - 2 * p) - X() * U(2 * p) * U(2 * n - 2 * p)};
        });
    add(T::split_odd_b, "split_odd_b", 2, "u[2n+1] = X u[2p+2] u[2n-2p] - u[2p+1] u[2n-2p-1]", any1,
        [](long n, long p) -> Sides {
            return {U(2 * n + 1), X() * U(2 * p + 2) * U(2 * n - 2 * p) - U(2 * p + 1) * U(2 * n - 2 * p - 1)};
        });
    add(T::split_odd_minus_a, "split_odd_minus_a", 2, "u[2n-1] = u[2p-1] u[2n+1-2p] - X u[2p-2] u[2n-2p]", any1,
        [](long n, long p) -> Sides {
            return {U(2 * n - 1), U(2 * p - 1) * U(2 * n + 1 - 2 * p) - X() * U(2 * p - 2) * U(2 * n - 2 * p)};
        });
    add(T::split_odd_minus_b, "split_odd_minus_b", 2, "u[2n-1] = X u[2p] u[2n-2p] - u[2p-1] u[2n-2p-1]", any1,
        [](long n, long p) -> Sides {
            return {U(2 * n - 1), X() * U(2 * p) * U(2 * n - 2 * p) - U(2 * p - 1) * U(2 * n - 2 * p - 1)};
        });

    add(T::quad_plus_a, "quad_plus_a", 1, "u[4n+1] = u[2n+1]^2 - X u[2n]^2", any1,
        [](long n, long) -> Sides {
            return {U(4 * n + 1), U(2 * n + 1) * U(2 * n + 1) - X() * U(2 * n) * U(2 * n)};
        });
    add(T::quad_plus_b, "quad_plus_b", 1, "u[4n+1] = X u[2n+2] u[2n] - u[2n+1] u[2n-1]", any1,
        [](long n, long) -> Sides {
            return {U(4 * n + 1), X() * U(2 * n + 2) * U(2 * n) - U(2 * n + 1) * U(2 * n - 1)};
        });
    add(T::quad_minus_a, "quad_minus_a", 1, "u[4n-1] = X u[2n]^2 - u[2n-1]^2", any1,
        [](long n, long) -> Sides {
            return {U(4 * n - 1), X() * U(2 * n) * U(2 * n) - U(2 * n - 1) * U(2 * n - 1)};
        });
    add(T::quad_minus_b, "quad_minus_b", 1, "u[4n-1] = u[2n+1] u[2n-1] - X u[2n] u[2n-2]", any1,
        [](long n, long) -> Sides {
            return {U(4 * n - 1), U(2 * n + 1) * U(2 * n - 1) - X() * U(2 * n) * U(2 * n - 2)};
        });

    add(T::square_odd, "square_odd", 1, "u[2n+1]^2 - 1 = X u[2n] u[2n+2]", any1,
        [](long n, long) -> Sides { return {U(2 * n + 1) * U(2 * n + 1) - K(1), X() * U(2 * n) * U(2 * n + 2)}; });
    add(T::square_even, "square_even", 1, "X u[2n]^2 - 1 = u[2n-1] u[2n+1]", any1,
        [](long n, long) -> Sides { return {X() * U(2 * n) * U(2 * n) - K(1), U(2 * n - 1) * U(2 * n + 1)}; });

    add(T::gap_plus, "gap_plus", 1, "u[4n+1] - u[4n-1] = 2 - X (4-X) u[2n]^2", any1,
        [](long n, long) -> Sides {
            return {U(4 * n + 1) - U(4 * n - 1), K(2) - X() * Y() * U(2 * n) * U(2 * n)};
        });
    add(T::gap_minus, "gap_minus", 1, "u[4n+3] - u[4n+1] = 2 - (4-X) u[2n+1]^2", any1,
        [](long n, long) -> Sides {
            return {U(4 * n + 3) - U(4 * n + 1), K(2) - Y() * U(2 * n + 1) * U(2 * n + 1)};
        });

    add(T::mix_even_a, "mix_even_a", 1, "n even: u[n-1] u[2n] - u[n] u[2n-1] = -u[n]", [](long n, long) { return even(n); },
        [](long n, long) -> Sides { return {U(n - 1) * U(2 * n) - U(n) * U(2 * n - 1), -U(n)}; });
    add(T::mix_even_b, "mix_even_b", 1, "n even: X u[n] u[2n] - u[n+1] u[2n-1] = -u[n-1]",
        [](long n, long) { return even(n); },
        [](long n, long) -> Sides { return {X() * U(n) * U(2 * n) - U(n + 1) * U(2 * n - 1), -U(n - 1)}; });
    add(T::mix_odd_a, "mix_odd_a", 1, "n odd: X u[n-1] u[2n] - u[n] u[2n-1] = -u[n]", [](long n, long) { return odd(n); },
        [](long n, long) -> Sides { return {X() * U(n - 1) * U(2 * n) - U(n) * U(2 * n - 1), -U(n)}; });
    add(T::mix_odd_b, "mix_odd_b", 1, "n odd: u[n] u[2n] - u[n+1] u[2n-1] = -u[n-1]", [](long n, long) { return odd(n); },
        [](long n, long) -> Sides { return {U(n) * U(2 * n) - U(n + 1) * U(2 * n - 1), -U(n - 1)}; });
    return v;
}

}  // namespace

const std::vector<IdentitySpec>& identity_catalog() {
    static const std::vector<IdentitySpec> cat = build_catalog();
    return cat;
}

const IdentitySpec& identity_spec(IdentityTag tag) {
    for (const auto& s : identity_catalog())
        if (s.tag == tag) return s;
    throw std::invalid_argument("unknown identity");
}

std::optional<IdentityTag> identity_from_name(const std::string& name) {
    for (const auto& s : identity_catalog())
        if (s.name == name) return s.tag;
    return std::nullopt;
}

IdentityReport check_identity(IdentityTag tag, long lo, long hi) {
    const IdentitySpec& spec = identity_spec(tag);
    IdentityReport rep;
    rep.tag = tag;
    // warm the u cache over every index the builders can touch
    u_poly(4 * std::max(std::labs(lo), std::labs(hi)) + 8);
    std::vector<std::pair<long, long>> tuples;
    for (long a = lo; a <= hi; ++a) {
        if (spec.arity == 1) {
            tuples.emplace_back(a, 0);
            continue;
        }
        for (long b = lo; b <= hi; ++b) tuples.emplace_back(a, b);
    }
    std::vector<char> status(tuples.size(), 0);  // 0 skipped, 1 pass, 2 fail
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        auto [a, b] = tuples[i];
        if (!spec.admissible(a, b)) continue;
        auto [lhs, rhs] = spec.sides(a, b);
        status[i] = lhs == rhs ? 1 : 2;
    }
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (status[i] == 0) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (status[i] == 2) {
            rep.pass = false;
            if (spec.arity == 1) rep.failures.push_back({tuples[i].first});
            else rep.failures.push_back({tuples[i].first, tuples[i].second});
        }
    }
    return rep;
}

long theta_v_expected(long n) {
    if (n % 2 || n < 4) return 1;
    long p = prime_power_base(n / 2);
    return p ? p : 1;
}

ThetaReport theta_v_suite(long n_max) {
    ThetaReport rep;
    for (long n = 3; n <= n_max; ++n) {
        ++rep.checked;
        Rational t = theta(v_poly(n));
        if (t != Rational(theta_v_expected(n))) {
            rep.pass = false;
            rep.mismatches.push_back(n);
        }
    }
    return rep;
}

}  // namespace reflektor
