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

#pragma once

// Double-precision reference computations for periods and plus symbols.
// They share no code with the library: a_n come from brute-force point
// counts, the period from quadrature, and the symbols [a/p]^+ from twisted
// L-values of Dirichlet characters mod p.

#include <cmath>
#include <complex>
#include <vector>

#include "oracles/curves.hpp"

namespace oracle {

using cplx = std::complex<long double>;

inline std::vector<long>
an_by_counting(const excezero::tate::CurveData& e, long nmax) {
    std::vector<long> ap(nmax + 1, 0);
    std::vector<bool> composite(nmax + 1, false);
    std::vector<long> an(nmax + 1, 0);
    an[1] = 1;
    for (long l = 2; l <= nmax; ++l) {
        if (composite[l]) {
            continue;
        }
        for (long j = 2 * l; j <= nmax; j += l) {
            composite[j] = true;
        }
        ap[l] = l + 1 - brute_force_count(e, l);
    }
    for (long n = 2; n <= nmax; ++n) {
        long l = 2;
        while (n % l != 0) {
            ++l;
        }
        long pk = 1;
        int k = 0;
        while (n % (pk * l) == 0) {
            pk *= l;
            ++k;
        }
        if (pk != n) {
            an[n] = an[pk] * an[n / pk];
            continue;
        }
        bool bad = mpz_divisible_ui_p(e.discriminant().get_mpz_t(), l) != 0;
        if (k == 1) {
            an[n] = ap[l];
        } else if (bad) {
            an[n] = an[n / l] * ap[l];
        } else {
            an[n] = ap[l] * an[n / l] - l * an[n / l / l];
        }
    }
    return an;
}

// Real period times the number of real components, by tanh-free Simpson
// quadrature of int_{e1}^oo dx / sqrt(R(x)) after x = e1 + tan(theta)^2.
inline long double
omega_by_quadrature(const excezero::tate::CurveData& e) {
    long double b2 = e.b2().get_d(), b4 = e.b4().get_d(), b6 = e.b6().get_d();
    auto r = [&](long double x) { return ((4 * x + b2) * x + 2 * b4) * x + b6; };
    // largest real root by bisection on a bracket
    long double lo = -1e6L, hi = 1e6L;
    for (int i = 0; i < 400; ++i) {
        long double mid = (lo + hi) / 2;
        (r(mid) > 0 ? hi : lo) = mid;
    }
    long double e1 = hi;
    // R(x) = 4 (x - e1)(x^2 + c1 x + c0)
    long double c1 = b2 / 4 + e1;
    long double c0 = (2 * b4) / 4 + c1 * e1;
    auto q = [&](long double x) { return x * x + c1 * x + c0; };
    // int_{e1}^oo dx/sqrt(R) = int_0^{pi/2} sec^2 / sqrt(q(e1 + tan^2)) dtheta
    auto f = [&](long double th) {
        if (th >= M_PIl / 2) {
            return 1.0L;
        }
        long double t = std::tan(th);
        long double s = 1 / std::cos(th);
        return s * s / std::sqrt(q(e1 + t * t));
    };
    const int n = 200000;
    long double h = (M_PIl / 2) / n;
    long double sum = f(0) + f(M_PIl / 2);
    for (int i = 1; i < n; ++i) {
        sum += (i % 2 ? 4 : 2) * f(i * h);
    }
    long double half = sum * h / 3;
    long double omega1 = 2 * half;
    bool two_components = sgn(e.discriminant()) > 0;
    return two_components ? 2 * omega1 : omega1;
}

// (1 + eps) sum a_n/n exp(-2 pi n / sqrt(N))
inline long double
l_value_by_series(const std::vector<long>& an, long conductor, int root_number) {
    long double x = std::exp(-2 * M_PIl / std::sqrt((long double)conductor));
    long double sum = 0, xn = 1;
    for (size_t n = 1; n < an.size(); ++n) {
        xn *= x;
        sum += an[n] * xn / n;
    }
    return (1 + root_number) * sum;
}

// [a/p]^+ for a = 1..p-1 from tau(chi) L(f, chi^-1, 1)/Omega over the even
// Dirichlet characters chi mod p (the twisted forms have level N p^2), plus
// the trivial-character relation sum_a [a/p]^+ = 0, inverted by orthogonality.
inline std::vector<long double>
plus_symbols_mod_p(const excezero::tate::CurveData& e, long tame_level, long double omega) {
    const long p = e.p();
    long g = 2;
    for (;; ++g) {
        long x = 1;
        bool gen = true;
        for (long k = 1; k < p - 1; ++k) {
            x = x * g % p;
            if (x == 1) {
                gen = false;
                break;
            }
        }
        if (gen) {
            break;
        }
    }
    std::vector<long> dlog(p, 0);
    for (long k = 0, x = 1; k < p - 1; ++k, x = x * g % p) {
        dlog[x] = k;
    }
    const long double q = (long double)tame_level * p * p;
    const long double h1 = 1.25L / std::sqrt(q), h2 = 0.8L / std::sqrt(q);
    const long nmax = (long)(45 / (2 * M_PIl * h2)) + 10;
    auto an = an_by_counting(e, nmax);

    std::vector<cplx> z(p - 1, 0);  // z[j] for even j
    for (long j = 2; j < p - 1; j += 2) {
        auto chi = [&](long a) { return std::polar(1.0L, 2 * M_PIl * j * dlog[a % p] / (p - 1)); };
        cplx tau = 0;
        for (long a = 1; a < p; ++a) {
            tau += chi(a) * std::polar(1.0L, 2 * M_PIl * a / p);
        }
        cplx s1 = 0, s2 = 0, t1 = 0, t2 = 0;
        for (long n = 1; n <= nmax; ++n) {
            if (n % p == 0 || an[n] == 0) {
                continue;
            }
            cplx b = std::conj(chi(n)) * (long double)an[n] / (long double)n;
            s1 += b * std::exp(-2 * M_PIl * n * h1);
            s2 += b * std::exp(-2 * M_PIl * n * h2);
            t1 += std::conj(b) * std::exp(-2 * M_PIl * n / (q * h1));
            t2 += std::conj(b) * std::exp(-2 * M_PIl * n / (q * h2));
        }
        cplx eta = (s1 - s2) / (t2 - t1);
        z[j] = tau * (s1 + eta * t1) / omega;
    }
    std::vector<long double> out(p, 0);
    for (long a = 1; a < p; ++a) {
        cplx acc = 0;
        for (long j = 2; j < p - 1; j += 2) {
            acc += std::polar(1.0L, -2 * M_PIl * j * dlog[a] / (p - 1)) * z[j];
        }
        // Odd characters and the trivial one contribute nothing.
        out[a] = acc.real() / (p - 1);
    }
    return out;
}

}  // namespace oracle
