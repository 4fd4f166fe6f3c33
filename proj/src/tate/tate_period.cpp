// Copyright 2026-present the excezero project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "excezero/tate/tate_period.hpp"

#include <algorithm>

#include "excezero/errors.hpp"
#include "excezero/padic/padic_functions.hpp"

namespace excezero::tate {

namespace {

std::vector<mpz_class>
series_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, size_t terms) {
    std::vector<mpz_class> c(terms, 0);
    for (size_t i = 0; i < a.size() && i < terms; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < b.size() && i + j < terms; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

}  // namespace

std::vector<mpz_class>
inverse_j_series(int terms) {
    size_t n = static_cast<size_t>(terms) + 1;
    // Delta = q prod (1 - q^k)^24
    std::vector<mpz_class> prod(n, 0);
    prod[0] = 1;
    for (size_t k = 1; k < n; ++k) {
        for (int r = 0; r < 24; ++r) {
            for (size_t i = n - 1; i >= k; --i) {
                prod[i] -= prod[i - k];
            }
        }
    }
    std::vector<mpz_class> delta(n, 0);
    for (size_t i = 1; i < n; ++i) {
        delta[i] = prod[i - 1];
    }
    // E4 = 1 + 240 sum sigma_3(k) q^k
    std::vector<mpz_class> e4(n, 0);
    e4[0] = 1;
    for (size_t k = 1; k < n; ++k) {
        mpz_class s = 0;
        for (size_t d = 1; d <= k; ++d) {
            if (k % d == 0) {
                s += mpz_class(d) * d * d;
            }
        }
        e4[k] = 240 * s;
    }
    auto e4cube = series_mul(series_mul(e4, e4, n), e4, n);
    // E4^3 has constant term 1, so its inverse is integral.
    std::vector<mpz_class> inv(n, 0);
    inv[0] = 1;
    for (size_t k = 1; k < n; ++k) {
        mpz_class s = 0;
        for (size_t i = 1; i <= k; ++i) {
            s += e4cube[i] * inv[k - i];
        }
        inv[k] = -s;
    }
    return series_mul(delta, inv, n);
}

namespace {

const std::vector<mpz_class>&
inverse_j_cached(int terms) {
    thread_local std::vector<mpz_class> cache;
    if (static_cast<int>(cache.size()) < terms + 1) {
        cache = inverse_j_series(std::max(terms, kInverseJTerms));
    }
    return cache;
}

int
terms_for(const PadicNumber& q) {
    int v = q.valuation();
    int n = q.precision();
    return std::max(kInverseJTerms, n / std::max(v, 1) + 2);
}

}  // namespace

PadicNumber
inverse_j_at(const PadicNumber& q) {
    if (q.valuation() < 1) {
        throw DomainError("1/j(q) needs ord_p(q) >= 1");
    }
    int terms = terms_for(q);
    const auto& c = inverse_j_cached(terms);
    long p = q.prime();
    PadicNumber sum = PadicNumber::exact_zero(p);
    for (int k = terms; k >= 1; --k) {
        sum = (sum + PadicNumber::from_integer(p, c[k], q.precision())) * q;
    }
    return sum;
}

namespace {

PadicNumber
inverse_j_derivative_at(const PadicNumber& q, int terms) {
    const auto& c = inverse_j_cached(terms);
    long p = q.prime();
    PadicNumber sum = PadicNumber::exact_zero(p);
    for (int k = terms; k >= 2; --k) {
        sum = (sum + PadicNumber::from_integer(p, c[k] * k, q.precision())) * q;
    }
    return sum + PadicNumber::one(p, q.precision());
}

}  // namespace

TateParameter
tate_period(const CurveData& e, long p, int precision) {
    auto check = check_split_multiplicative(e, p);
    if (!check.split) {
        throw DomainError("tate_period: " + check.diagnostic);
    }
    int v = ord_discriminant(e, p);
    int target = precision + v;
    mpq_class inv_j(e.discriminant(), e.c4() * e.c4() * e.c4());
    inv_j.canonicalize();
    PadicNumber t = PadicNumber::from_rational(p, inv_j, target);
    TateParameter out;
    out.p = p;
    PadicNumber q = t;
    int terms = std::max(kInverseJTerms, target / v + 2);
    for (int iter = 0; iter < 64; ++iter) {
        PadicNumber r = inverse_j_at(q) - t;
        out.residual_valuations.push_back(r.valuation());
        if (r.is_zero()) {
            break;
        }
        if (out.residual_valuations.size() >= 2) {
            auto n = out.residual_valuations.size();
            if (out.residual_valuations[n - 1] <= out.residual_valuations[n - 2]) {
                throw ConvergenceError("tate_period: Newton residual stopped decreasing");
            }
        }
        q = (q - r / inverse_j_derivative_at(q, terms)).truncate(target);
    }
    if (!(inverse_j_at(q) - t).is_zero()) {
        throw ConvergenceError("tate_period: Newton iteration did not converge");
    }
    out.q = q.truncate(target);
    out.ord_q = out.q.valuation();
    out.l_invariant = padic::padic_log(out.q) / PadicNumber::from_integer(p, out.ord_q, target);
    return out;
}

PadicNumber
branch_log(const TateParameter& t, const PadicNumber& x) {
    if (x.is_zero()) {
        throw DomainError("branch_log of zero");
    }
    PadicNumber ord = PadicNumber::from_integer(t.p, x.valuation(), t.l_invariant.precision() + 5);
    return padic::padic_log(x) - t.l_invariant * ord;
}

}  // namespace excezero::tate
