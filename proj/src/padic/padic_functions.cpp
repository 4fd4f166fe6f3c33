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

#include "excezero/padic/padic_functions.hpp"

#include "excezero/errors.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::padic {

namespace {

// Smallest exponent e with floor(log_p k) <= e for all k <= limit.
int
log_floor(long limit, long p) {
    int e = 0;
    for (long q = p; q <= limit; q *= p) {
        ++e;
    }
    return e;
}

}  // namespace

PadicNumber
padic_log(const PadicNumber& x) {
    if (x.is_zero()) {
        throw DomainError("log of zero");
    }
    long p = x.prime();
    int r = x.relative_precision();
    const mpz_class& mod_r = prime_power(p, r);
    mpz_class w;
    mpz_powm_ui(w.get_mpz_t(), x.unit().get_mpz_t(), p - 1, mod_r.get_mpz_t());
    mpz_class y = w - 1;
    if (y == 0) {
        return PadicNumber::zero(p, r);
    }
    int vy = valuation(y, p);
    long kmax = 1;
    while (kmax * vy - log_floor(kmax, p) < r) {
        ++kmax;
    }
    int guard = log_floor(kmax, p);
    const mpz_class& mod_w = prime_power(p, r + guard);
    mpz_class sum = 0;
    mpz_class ypow = 1;
    mpz_class prime(p);
    for (long k = 1; k < kmax; ++k) {
        ypow = (ypow * y) % mod_w;
        mpz_class kk(k);
        int vk = static_cast<int>(mpz_remove(kk.get_mpz_t(), kk.get_mpz_t(), prime.get_mpz_t()));
        mpz_class term = ypow / prime_power(p, vk);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), kk.get_mpz_t(), mod_r.get_mpz_t());
        term *= inv;
        if (k % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
        sum %= mod_r;
    }
    mpz_class inv_pm1;
    mpz_class pm1(p - 1);
    mpz_invert(inv_pm1.get_mpz_t(), pm1.get_mpz_t(), mod_r.get_mpz_t());
    return PadicNumber::from_integer(p, sum * inv_pm1, r);
}

namespace {

PadicNumber
exp_series(const PadicNumber& x, bool include_one) {
    long p = x.prime();
    int n = x.precision();
    int v = x.valuation();
    if (v < 1) {
        throw ConvergenceError("exp: argument outside the disc ord_p(x) >= 1");
    }
    mpz_class xv = x.to_integer();
    // v_p(k!) <= (k - 1) / (p - 1), so k*v - (k - 1)/(p - 1) >= n bounds the tail.
    long kmax = 1;
    while (kmax * v - (kmax - 1) / (p - 1) < n) {
        ++kmax;
    }
    int guard = static_cast<int>(factorial_valuation(kmax, p));
    const mpz_class& mod_n = prime_power(p, n);
    const mpz_class& mod_w = prime_power(p, n + guard);
    mpz_class sum = include_one ? 1 : 0;
    mpz_class xpow = 1;
    mpz_class fact_unit = 1;
    int fact_val = 0;
    mpz_class prime(p);
    for (long k = 1; k < kmax; ++k) {
        xpow = (xpow * xv) % mod_w;
        mpz_class kk(k);
        fact_val += static_cast<int>(mpz_remove(kk.get_mpz_t(), kk.get_mpz_t(), prime.get_mpz_t()));
        fact_unit = (fact_unit * kk) % mod_n;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), fact_unit.get_mpz_t(), mod_n.get_mpz_t());
        sum += (xpow / prime_power(p, fact_val)) * inv;
        sum %= mod_n;
    }
    return PadicNumber::from_integer(p, sum, n);
}

}  // namespace

PadicNumber
padic_exp(const PadicNumber& x, int precision_if_exact) {
    if (x.is_exact_zero()) {
        return PadicNumber::one(x.prime(), precision_if_exact);
    }
    if (x.is_zero()) {
        return PadicNumber::one(x.prime(), x.precision());
    }
    return exp_series(x, true);
}

PadicNumber
padic_expm1(const PadicNumber& x) {
    if (x.is_zero()) {
        return x;
    }
    return exp_series(x, false);
}

mpz_class
teichmuller_integer(long p, const mpz_class& a, int precision) {
    if (a % p == 0) {
        throw DomainError("Teichmuller lift of a non-unit");
    }
    const mpz_class& m = prime_power(p, precision);
    mpz_class e = prime_power(p, precision - 1);
    mpz_class x = a % m;
    if (x < 0) {
        x += m;
    }
    mpz_class out;
    mpz_powm(out.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return out;
}

PadicNumber
teichmuller(long p, const mpz_class& a, int precision) {
    return PadicNumber::from_integer(p, teichmuller_integer(p, a, precision), precision);
}

PadicNumber
teichmuller(const PadicNumber& x) {
    if (x.is_zero()) {
        throw DomainError("Teichmuller lift of zero");
    }
    int r = x.relative_precision();
    return teichmuller(x.prime(), x.unit(), r);
}

PadicNumber
principal_unit_part(const PadicNumber& x) {
    if (x.is_zero()) {
        throw DomainError("principal unit part of zero");
    }
    PadicNumber u = x.shift(-x.valuation());
    return u / teichmuller(x);
}

int
legendre_symbol(const mpz_class& a, long p) {
    mpz_class prime(p);
    return mpz_legendre(a.get_mpz_t(), prime.get_mpz_t());
}

PadicNumber
padic_sqrt(const PadicNumber& x) {
    if (x.is_zero()) {
        throw DomainError("square root of zero");
    }
    long p = x.prime();
    int v = x.valuation();
    if (v % 2 != 0 || legendre_symbol(x.unit(), p) != 1) {
        throw DomainError("square root of a non-square");
    }
    long a = mpz_fdiv_ui(x.unit().get_mpz_t(), p);
    long root = 0;
    for (long t = 1; t <= p / 2; ++t) {
        if ((t * t) % p == a) {
            root = t;
            break;
        }
    }
    int r = x.relative_precision();
    const mpz_class& m = prime_power(p, r);
    mpz_class y = root;
    // Newton doubles the number of correct digits each step.
    for (int known = 1; known < r; known *= 2) {
        mpz_class inv;
        mpz_class two_y = 2 * y;
        mpz_invert(inv.get_mpz_t(), two_y.get_mpz_t(), m.get_mpz_t());
        y = (y - (y * y - x.unit()) * inv) % m;
        if (y < 0) {
            y += m;
        }
    }
    return PadicNumber::from_parts(p, v / 2, y, v / 2 + r);
}

}  // namespace excezero::padic
