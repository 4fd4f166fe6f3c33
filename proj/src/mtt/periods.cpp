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

#include "excezero/mtt/periods.hpp"

#include <algorithm>
#include <cmath>

#include "excezero/errors.hpp"

namespace excezero::mtt {

namespace bmp = boost::multiprecision;

LevelData
level_data(const tate::CurveData& e) {
    LevelData out;
    out.conductor = tate::semistable_conductor(e);
    out.tame_level = out.conductor / e.p();
    int w = 1;
    for (long q : tate::bad_primes(e)) {
        int wq = -static_cast<int>(tate::a_ell(e, q));
        out.atkin_lehner[q] = wq;
        w *= wq;
    }
    out.root_number = -w;
    return out;
}

namespace {

Real
to_real(const mpz_class& z) {
    return Real(z.get_str());
}

Real
cubic(const tate::CurveData& e, const Real& x) {
    return ((4 * x + to_real(e.b2())) * x + 2 * to_real(e.b4())) * x + to_real(e.b6());
}

Real
cubic_prime(const tate::CurveData& e, const Real& x) {
    return (12 * x + 2 * to_real(e.b2())) * x + 2 * to_real(e.b4());
}

Real
polish(const tate::CurveData& e, Real x) {
    for (int i = 0; i < 8; ++i) {
        Real d = cubic_prime(e, x);
        if (d == 0) {
            break;
        }
        x -= cubic(e, x) / d;
    }
    return x;
}

}  // namespace

std::vector<Real>
two_torsion_abscissae(const tate::CurveData& e) {
    // x = X - b2/12 turns the cubic into 4X^3 - (c4/12) X - c6/216.
    Real shift = to_real(e.b2()) / 12;
    Real pp = -to_real(e.c4()) / 48;  // X^3 + pp X + qq
    Real qq = -to_real(e.c6()) / 864;
    std::vector<Real> roots;
    if (sgn(e.discriminant()) > 0) {
        Real r = 2 * bmp::sqrt(-pp / 3);
        Real arg = (3 * qq / (2 * pp)) * bmp::sqrt(-3 / pp);
        arg = std::clamp(arg, Real(-1), Real(1));
        Real theta = bmp::acos(arg) / 3;
        for (int k = 0; k < 3; ++k) {
            roots.push_back(r * bmp::cos(theta - 2 * real_pi() * k / 3) - shift);
        }
    } else {
        Real d = qq * qq / 4 + pp * pp * pp / 27;
        Real sd = bmp::sqrt(d);
        Real u = bmp::cbrt(-qq / 2 + sd);
        Real v = bmp::cbrt(-qq / 2 - sd);
        roots.push_back(u + v - shift);
    }
    for (auto& x : roots) {
        x = polish(e, x);
    }
    std::sort(roots.begin(), roots.end(), [](const Real& a, const Real& b) { return a > b; });
    return roots;
}

Real
agm(Real a, Real b) {
    Real eps = bmp::pow(Real(10), -(kRealDigits - 4));
    for (int i = 0; i < 200 && bmp::abs(a - b) > eps * bmp::abs(a); ++i) {
        Real m = (a + b) / 2;
        b = bmp::sqrt(a * b);
        a = m;
    }
    return a;
}

Real
real_period(const tate::CurveData& e) {
    auto roots = two_torsion_abscissae(e);
    if (roots.size() == 3) {
        Real w = real_pi() / agm(bmp::sqrt(roots[0] - roots[2]), bmp::sqrt(roots[0] - roots[1]));
        return 2 * w;
    }
    const Real& e1 = roots[0];
    Real beta = 3 * e1 + to_real(e.b2()) / 4;
    Real alpha = bmp::sqrt(3 * e1 * e1 + to_real(e.b2()) * e1 / 2 + to_real(e.b4()) / 2);
    return 2 * real_pi() / agm(2 * bmp::sqrt(alpha), bmp::sqrt(2 * alpha + beta));
}

long
truncation_bound(const Real& t, int digits) {
    double td = static_cast<double>(t);
    double need = digits * std::log(10.0) + 12.0;
    return static_cast<long>(need / (2 * M_PI * td)) + 10;
}

Real
l_value_at_one(const tate::CurveData& e, const LevelData& level, const std::vector<long>& an) {
    if (level.root_number == -1) {
        return Real(0);
    }
    Real t = 1 / bmp::sqrt(Real(level.conductor));
    long nmax = truncation_bound(t, kRealDigits - 10);
    if (static_cast<long>(an.size()) <= nmax) {
        throw PrecisionError("a_n table too short for L(E,1)");
    }
    Real x = bmp::exp(-2 * real_pi() * t);
    Real xn = 1;
    Real sum = 0;
    for (long n = 1; n <= nmax; ++n) {
        xn *= x;
        if (an[n] != 0) {
            sum += Real(an[n]) / n * xn;
        }
    }
    return 2 * sum;
}

}  // namespace excezero::mtt
