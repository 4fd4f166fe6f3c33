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

#include "excezero/mtt/real.hpp"

#include <sstream>

namespace excezero::mtt {

Real
real_pi() {
    static const Real pi = boost::multiprecision::acos(Real(-1));
    return pi;
}

Cx
operator+(const Cx& a, const Cx& b) {
    return {a.re + b.re, a.im + b.im};
}

Cx
operator-(const Cx& a, const Cx& b) {
    return {a.re - b.re, a.im - b.im};
}

Cx
operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cx
operator*(const Cx& a, const Real& b) {
    return {a.re * b, a.im * b};
}

Cx
operator/(const Cx& a, const Cx& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Cx
conj(const Cx& a) {
    return {a.re, -a.im};
}

Real
abs(const Cx& a) {
    return boost::multiprecision::sqrt(a.re * a.re + a.im * a.im);
}

Cx
root_of_unity(long num, long den) {
    num %= den;
    if (num < 0) {
        num += den;
    }
    Real ang = 2 * real_pi() * Real(num) / Real(den);
    return {boost::multiprecision::cos(ang), boost::multiprecision::sin(ang)};
}

Real
to_real(const mpq_class& q) {
    Real num(q.get_num().get_str());
    Real den(q.get_den().get_str());
    return num / den;
}

std::optional<mpq_class>
reconstruct_rational(const Real& x, const Real& tolerance, long max_denominator) {
    // Convergents h_k / k_k of the continued fraction of x.
    mpz_class h_prev = 0, h = 1;
    mpz_class k_prev = 1, k = 0;
    Real rest = x;
    for (int step = 0; step < 200; ++step) {
        Real fl = boost::multiprecision::floor(rest);
        mpz_class a;
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDD);
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        if (k > max_denominator) {
            return std::nullopt;
        }
        mpq_class cand(h, k);
        cand.canonicalize();
        if (boost::multiprecision::abs(x - to_real(cand)) < tolerance) {
            return cand;
        }
        Real frac = rest - fl;
        if (frac == 0) {
            return std::nullopt;
        }
        rest = 1 / frac;
    }
    return std::nullopt;
}

std::string
format_real(const Real& x, int digits) {
    return x.str(digits, std::ios_base::scientific);
}

}  // namespace excezero::mtt
