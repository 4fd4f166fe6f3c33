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

#include "excezero/mtt/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "excezero/errors.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::mtt {

namespace bmp = boost::multiprecision;

namespace {

void
require_primitive(const PadicCharacter& chi) {
    if (chi.is_trivial() || chi.m() < 1) {
        throw DomainError("interpolation needs a nontrivial character");
    }
    if (chi.exponent() % chi.prime() == 0) {
        throw DomainError("character is not primitive of conductor p^(m+1)");
    }
}

// Gaussian elimination with partial pivoting on a small dense complex system.
std::vector<Cx>
solve(std::vector<std::vector<Cx>> a, std::vector<Cx> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r) {
            if (abs(a[r][col]) > abs(a[piv][col])) {
                piv = r;
            }
        }
        std::swap(a[col], a[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (size_t r = col + 1; r < n; ++r) {
            Cx f = a[r][col] / a[col][col];
            for (size_t k = col; k < n; ++k) {
                a[r][k] = a[r][k] - f * a[col][k];
            }
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    std::vector<Cx> x(n);
    for (size_t i = n; i-- > 0;) {
        Cx s = rhs[i];
        for (size_t k = i + 1; k < n; ++k) {
            s = s - a[i][k] * x[k];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

}  // namespace

TwistedPeriod
twisted_period(const ModularSymbolTable& table, const PadicCharacter& chi, SymbolConfig config) {
    require_primitive(chi);
    const tate::CurveData& e = table.curve();
    const long p = e.p();
    if (chi.prime() != p) {
        throw ValidationError("character prime differs from the curve prime");
    }
    const long c = padic::prime_power(p, chi.m() + 1).get_si();
    const long pm = c / p;
    const long d = pm - pm / p;
    const long q_level = table.level().tame_level * c * c;

    std::vector<long> k_of(c, 0);
    for (long a = 1; a < c; ++a) {
        if (a % p != 0) {
            k_of[a] = chi.zeta_exponent(a);
        }
    }

    // L(g, 1) = S(A) + eta T(A) for every A > 0, with
    // S(A) = sum b_n/n exp(-2 pi n A), T(A) = sum conj(b_n)/n exp(-2 pi n/(Q A)).
    Real root_q = bmp::sqrt(Real(q_level));
    const std::array<Real, 3> heights = {Real(5) / (4 * root_q), Real(4) / (5 * root_q),
                                         1 / root_q};
    long nmax = truncation_bound(heights[1], config.digits + 4);
    std::vector<long> an = tate::an_table(e, nmax);

    std::vector<long> conj_index;
    for (long b = 1; b < pm; ++b) {
        if (b % p != 0) {
            conj_index.push_back(b);
        }
    }

    TwistedPeriod out;
    out.terms = nmax;
    std::vector<Cx> z;
    for (long b : conj_index) {
        // chi^b(n) = exp(2 pi i b k(n) / c); the twist uses its conjugate.
        Cx tau;
        for (long a = 1; a < c; ++a) {
            if (a % p != 0) {
                tau = tau + root_of_unity(b * k_of[a] + a, c);
            }
        }
        std::vector<Cx> chi_table(c);
        for (long r = 0; r < c; ++r) {
            if (r % p != 0) {
                chi_table[r] = root_of_unity(b * k_of[r], c);
            }
        }
        std::array<Cx, 3> s{}, t{};
        std::array<Real, 3> xs, xt, ps, pt;
        for (int j = 0; j < 3; ++j) {
            xs[j] = bmp::exp(-2 * real_pi() * heights[j]);
            xt[j] = bmp::exp(-2 * real_pi() / (Real(q_level) * heights[j]));
            ps[j] = 1;
            pt[j] = 1;
        }
        for (long n = 1; n <= nmax; ++n) {
            for (int j = 0; j < 3; ++j) {
                ps[j] *= xs[j];
                pt[j] *= xt[j];
            }
            if (an[n] == 0 || n % p == 0) {
                continue;
            }
            const Cx& chi_n = chi_table[n % c];
            Real w = Real(an[n]) / n;
            for (int j = 0; j < 3; ++j) {
                s[j] = s[j] + conj(chi_n) * (w * ps[j]);
                t[j] = t[j] + chi_n * (w * pt[j]);
            }
        }
        Cx eta = (s[0] - s[1]) / (t[1] - t[0]);
        Cx l_value = s[0] + eta * t[0];
        Cx check = s[2] + eta * t[2];
        out.functional_equation_residual =
            std::max<Real>(out.functional_equation_residual, abs(check - l_value));
        out.root_number_modulus_error =
            std::max<Real>(out.root_number_modulus_error, bmp::abs(abs(eta) - 1));
        z.push_back(tau * l_value * (1 / table.omega_plus()));
    }

    std::vector<std::vector<Cx>> vander(d, std::vector<Cx>(d));
    for (long r = 0; r < d; ++r) {
        for (long i = 0; i < d; ++i) {
            vander[r][i] = root_of_unity(conj_index[r] * i, pm);
        }
    }
    std::vector<Cx> coeffs = solve(vander, z);
    Real tolerance = bmp::pow(Real(10), -(config.digits / 2));
    for (const auto& ci : coeffs) {
        out.imaginary_residual = std::max<Real>(out.imaginary_residual, bmp::abs(ci.im));
        auto rat = reconstruct_rational(ci.re, tolerance, config.max_denominator);
        if (!rat || bmp::abs(ci.im) > tolerance) {
            throw PrecisionError("twisted L-value is not reconstructible at " +
                                 std::to_string(config.digits) + " digits");
        }
        out.coefficients.push_back(*rat);
    }
    return out;
}

namespace {

CyclotomicElement
element_from_rationals(long p, int level, const std::vector<mpq_class>& by_exponent,
                       int precision) {
    std::vector<PadicNumber> v;
    v.reserve(by_exponent.size());
    for (const auto& r : by_exponent) {
        v.push_back(r == 0 ? PadicNumber::exact_zero(p)
                           : PadicNumber::from_rational(p, r, precision));
    }
    return CyclotomicElement::from_exponents(p, level, v);
}

}  // namespace

CyclotomicElement
twisted_period_element(const TwistedPeriod& tp, const PadicCharacter& chi, int precision) {
    return element_from_rationals(chi.prime(), chi.m() - 1, tp.coefficients, precision);
}

InterpolationReport
interpolation_check(const ModularSymbolTable& table, const PadicCharacter& chi, int precision,
                    SymbolConfig config) {
    require_primitive(chi);
    const long p = chi.prime();
    if (table.curve().p() != p) {
        throw ValidationError("character prime differs from the curve prime");
    }
    const long c = padic::prime_power(p, chi.m() + 1).get_si();
    const long pm = c / p;

    InterpolationReport out;
    out.p = p;
    out.m = chi.m();
    out.exponent = chi.exponent();
    out.level = chi.m() + 1;

    // chi(a) = zeta_{p^m}^(k(a)/p), so the sum is an element of Q(mu_{p^m}).
    std::vector<mpq_class> by_exponent(pm);
    for (long a = 1; a < c; ++a) {
        if (a % p != 0) {
            by_exponent[chi.zeta_exponent(a) / p] += measure(table, a, out.level);
        }
    }
    out.measure_side = element_from_rationals(p, chi.m() - 1, by_exponent, precision);
    out.period = twisted_period(table, chi, config);
    out.complex_side = twisted_period_element(out.period, chi, precision);
    out.digits_agree = std::min(precision, padic::agreement(out.measure_side, out.complex_side));
    return out;
}

}  // namespace excezero::mtt
