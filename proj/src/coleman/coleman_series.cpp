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

#include "excezero/coleman/coleman_series.hpp"

#include <algorithm>

#include "excezero/errors.hpp"
#include "excezero/padic/padic_functions.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::coleman {

using padic::padic_exp;
using padic::padic_log;

namespace {

int
capped(int digits, int cap) {
    return std::min(digits, cap);
}

CyclotomicElement
one_at(long p, int level, int precision) {
    return CyclotomicElement::from_padic(p, level, PadicNumber::one(p, precision));
}

}  // namespace

const char*
to_string(SeriesRoute r) {
    return r == SeriesRoute::closed_form ? "closed-form" : "conjugate-sum";
}

std::vector<CyclotomicElement>
x_values(long p, int n_max, int precision) {
    if (n_max < 0) {
        throw DomainError("level must be nonnegative");
    }
    std::vector<CyclotomicElement> out;
    for (int n = 0; n <= n_max; ++n) {
        const int work = precision + n + 1;
        const long order = padic::prime_power(p, n + 1).get_si();
        CyclotomicElement x =
            CyclotomicElement::from_padic(p, n, PadicNumber::from_integer(p, p, work));
        for (long a = 1; a < p; ++a) {
            long omega = padic::teichmuller_integer(p, a, n + 1).get_si();
            for (int k = 0; k <= n; ++k) {
                long pk = padic::prime_power(p, k).get_si();
                CyclotomicElement term =
                    CyclotomicElement::zeta_power(p, n, (omega * pk) % order, work) -
                    one_at(p, n, work);
                x += term * PadicNumber::from_parts(p, -k, 1, work + k);
            }
        }
        out.push_back(x.truncate(precision));
    }
    return out;
}

CyclotomicElement
cyclotomic_log(const CyclotomicElement& u) {
    const long p = u.prime();
    const int n = u.level();
    const int prec = u.precision();
    CyclotomicElement y = u - one_at(p, n, prec);
    // u is a principal unit iff u - 1 vanishes at z = 1 modulo p.
    PadicNumber at_one = PadicNumber::exact_zero(p);
    for (const auto& c : y.coefficients()) {
        at_one += c;
    }
    if (!at_one.is_zero() && at_one.valuation() < 1) {
        throw DomainError("cyclotomic log needs a principal unit");
    }
    CyclotomicElement v = u;
    int r = 0;
    while (!y.is_zero() && y.coefficient_valuation() < 1) {
        v = v.pow(p);
        y = v - one_at(p, n, prec);
        if (++r > n + 4) {
            throw ConvergenceError("principal unit does not approach 1 under p-th powers");
        }
    }
    if (y.is_zero()) {
        return (y - y).truncate(prec - r);
    }
    // log(1 + y) = sum (-1)^(k+1) y^k / k with ord(y) >= 1
    CyclotomicElement sum(p, n);
    CyclotomicElement power = y;
    for (int k = 1;; ++k) {
        if (k - padic::valuation(mpz_class(k), p) > prec + 1) {
            break;
        }
        PadicNumber inv_k = PadicNumber::from_integer(p, k, prec + 8).inverse();
        CyclotomicElement term = power * inv_k;
        if (k % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
        power = power * y;
    }
    return (sum * PadicNumber::from_parts(p, -r, 1, prec + 8)).truncate(prec - r);
}

int
default_degree(long p, int precision, int level) {
    return precision * static_cast<int>((p - 1) * padic::prime_power(p, level).get_si()) + 1;
}

namespace {

// Closed form: with C(y - 1, i - 1) = sum_j c_j y^j,
//   M_i = sum_{k>=0} sum_omega omega C(omega p^k - 1, i - 1)
//       = (p - 1) sum_{j = -1 mod (p-1)} c_j / (1 - p^j).
std::vector<PadicNumber>
scaled_closed_form(long p, int degree, int precision) {
    const long guard = padic::factorial_valuation(degree, p);
    const int w = precision + static_cast<int>(guard) + 2;
    const mpz_class& mod = padic::prime_power(p, w);
    std::vector<PadicNumber> m(degree, PadicNumber::exact_zero(p));
    // poly = prod_{t=1}^{i-1} (y - t); fact = (i - 1)! split as p^v * unit
    std::vector<mpz_class> poly{1};
    mpz_class unit = 1;
    long v = 0;
    std::vector<mpz_class> geometric_inv;  // (1 - p^j)^-1 mod p^w
    for (int i = 1; i < degree; ++i) {
        if (i >= 2) {
            long t = i - 1;
            std::vector<mpz_class> next(poly.size() + 1, 0);
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] -= poly[j] * t;
            }
            for (auto& c : next) {
                c %= mod;
            }
            poly = std::move(next);
            long tt = t;
            while (tt % p == 0) {
                tt /= p;
                ++v;
            }
            unit = (unit * tt) % mod;
        }
        while (geometric_inv.size() < poly.size()) {
            long j = static_cast<long>(geometric_inv.size());
            mpz_class d = 1 - (j < w ? padic::prime_power(p, static_cast<int>(j)) : mpz_class(0));
            if (j == 0) {
                geometric_inv.push_back(0);
                continue;
            }
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
            geometric_inv.push_back(inv);
        }
        mpz_class s = 0;
        for (size_t j = p - 2; j < poly.size(); j += p - 1) {
            s += poly[j] * geometric_inv[j];
        }
        s = (s * (p - 1)) % mod;
        if (s < 0) {
            s += mod;
        }
        if (s == 0) {
            m[i] = PadicNumber::zero(p, w - static_cast<int>(v));
            continue;
        }
        mpz_class unit_inv;
        mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
        PadicNumber num = PadicNumber::from_integer(p, (s * unit_inv) % mod, w);
        m[i] = num / PadicNumber::from_parts(p, static_cast<int>(v), 1, w + static_cast<int>(v));
    }
    return m;
}

// Direct sum over the conjugates omega in mu_{p-1} and k <= K.
std::vector<PadicNumber>
scaled_conjugate_sum(long p, int degree, int precision) {
    const long guard = padic::factorial_valuation(degree, p);
    const int w = precision + static_cast<int>(2 * guard) + 2;
    // term k has ord >= (p - 2) k - v_p((i - 1)!)
    const int k_max = static_cast<int>((w + guard) / (p - 2)) + 2;
    std::vector<PadicNumber> m(degree, PadicNumber::exact_zero(p));
    for (long a = 1; a < p; ++a) {
        PadicNumber omega = padic::teichmuller(p, a, w);
        for (int k = 0; k <= k_max; ++k) {
            PadicNumber y = omega * PadicNumber::from_integer(p, padic::prime_power(p, k), w) -
                            PadicNumber::one(p, w);
            // binom = C(y, i - 1), updated by (y - (i - 1)) / i
            PadicNumber binom = PadicNumber::one(p, w);
            for (int i = 1; i < degree; ++i) {
                if (i >= 2) {
                    binom *= (y - PadicNumber::from_integer(p, i - 2, w));
                    binom /= PadicNumber::from_integer(p, i - 1, w);
                }
                m[i] += omega * binom;
            }
        }
    }
    return m;
}

}  // namespace

std::vector<PadicNumber>
log_g_scaled_coefficients(long p, int degree, int precision, SeriesRoute route) {
    if (p < 5 || !padic::is_prime(p)) {
        throw DomainError("the construction needs a prime p >= 5");
    }
    if (degree < 1 || precision < 1) {
        throw ValidationError("degree and precision must be positive");
    }
    auto m = route == SeriesRoute::closed_form ? scaled_closed_form(p, degree, precision)
                                               : scaled_conjugate_sum(p, degree, precision);
    for (int i = 1; i < degree; ++i) {
        if (!m[i].is_zero() && m[i].valuation() < 0) {
            throw ConstructionError("coefficient " + std::to_string(i) + " of i*log g is not integral");
        }
        if (m[i].precision() < precision) {
            throw ConstructionError("guard digits exhausted at coefficient " + std::to_string(i));
        }
        m[i] = m[i].truncate(precision + static_cast<int>(padic::factorial_valuation(degree, p)) + 2);
    }
    return m;
}

PowerSeriesZp
construct_g(long p, int degree, int precision, SeriesRoute route) {
    const int guard = static_cast<int>(padic::factorial_valuation(degree, p));
    const int w = precision + guard + 2;
    std::vector<PadicNumber> m = log_g_scaled_coefficients(p, degree, w, route);
    // g = exp(p) G with G' = H' G: j G_j = sum_{i=1}^{j} M_i G_{j-i}.
    std::vector<PadicNumber> big_g(degree, PadicNumber::exact_zero(p));
    big_g[0] = PadicNumber::one(p, w);
    for (int j = 1; j < degree; ++j) {
        PadicNumber s = PadicNumber::exact_zero(p);
        for (int i = 1; i <= j; ++i) {
            if (!m[i].is_exact_zero()) {
                s += m[i] * big_g[j - i];
            }
        }
        big_g[j] = s / PadicNumber::from_integer(p, j, w);
    }
    PadicNumber g0 = padic_exp(PadicNumber::from_integer(p, p, w), w);
    for (int j = 0; j < degree; ++j) {
        PadicNumber c = big_g[j] * g0;
        if (!c.is_zero() && c.valuation() < 0) {
            throw ConstructionError("g is not integral at X^" + std::to_string(j));
        }
        if (c.precision() < precision) {
            throw ConstructionError("guard digits exhausted at X^" + std::to_string(j));
        }
        big_g[j] = c.truncate(precision);
    }
    return PowerSeriesZp::from_coefficients(p, std::move(big_g), degree);
}

int
NormCompatibleUnits::norm_agreement(int m, int n) const {
    if (m < n || m >= static_cast<int>(units.size()) || n < 0) {
        throw DomainError("norm needs stored levels m >= n");
    }
    return padic::agreement(units[m].norm_to_level(n), units[n]);
}

NormCompatibleUnits
evaluate_units(const PowerSeriesZp& g, int n_max) {
    NormCompatibleUnits out;
    out.p = g.prime();
    for (int n = 0; n <= n_max; ++n) {
        out.units.push_back(g.evaluate_at_zeta_minus_one(n));
    }
    return out;
}

OrdCPrime
ord_c_prime(const PowerSeriesZp& g) {
    const long p = g.prime();
    const PadicNumber& g0 = g.coefficient(0);
    PadicNumber shifted = g0 - PadicNumber::one(p, g0.precision());
    if (!shifted.is_zero() && shifted.valuation() < 1) {
        throw DomainError("g(0) is not a principal unit");
    }
    const int n = g0.precision();
    OrdCPrime out;
    PadicNumber log_gamma = padic_log(PadicNumber::from_integer(p, 1 + p, n + 2));
    PadicNumber pn = PadicNumber::from_integer(p, p, n + 2);
    out.ord = padic_log(g0) / (PadicNumber::from_integer(p, p - 1, n + 2) * log_gamma);
    out.l_varsigma = log_gamma * (PadicNumber::one(p, n + 2) - pn.inverse());
    out.product = out.ord * out.l_varsigma;
    out.digits = padic::agreement(out.product, PadicNumber::one(p, n + 2));
    return out;
}

bool
ColemanReport::passed() const {
    bool ok = log_g0_digits >= precision && c0_digits >= precision &&
              norm_digits >= precision && trace_digits >= precision &&
              ord_digits >= precision && uniqueness_digits >= precision &&
              norm_invariance_digits >= precision;
    for (int d : log_cn_digits) {
        ok = ok && d >= precision;
    }
    return ok;
}

ColemanReport
verify_coleman(long p, int precision, int n_max) {
    ColemanReport r;
    r.p = p;
    r.precision = precision;
    // extra digits absorb the p-th power steps of the cyclotomic log
    const int work = precision + n_max + 3;
    r.degree = default_degree(p, work, n_max);
    r.g = construct_g(p, r.degree, work, SeriesRoute::closed_form);
    PowerSeriesZp other = construct_g(p, r.degree + 7, work + 2, SeriesRoute::conjugate_sum);
    r.uniqueness_digits = capped(agreement(r.g, other), precision);

    r.log_g0_digits =
        capped(padic::agreement(padic_log(r.g.coefficient(0)), PadicNumber::from_integer(p, p, work)),
               precision);
    auto units = evaluate_units(r.g, n_max);
    auto xs = x_values(p, n_max, work);
    for (int n = 0; n <= n_max; ++n) {
        r.log_cn_digits.push_back(
            capped(padic::agreement(cyclotomic_log(units.units[n]), xs[n]), precision));
    }
    r.c0_digits = capped(padic::agreement(units.units[0], one_at(p, 0, work)), precision);
    if (n_max >= 1) {
        r.norm_digits = capped(units.norm_agreement(1, 0), precision);
        r.trace_digits = capped(padic::agreement(xs[1].trace_to_level(0), xs[0]), precision);
    } else {
        r.norm_digits = precision;
        r.trace_digits = precision;
    }
    r.ord = ord_c_prime(r.g);
    r.ord_digits = capped(r.ord.digits, precision);
    PowerSeriesZp ng = coleman_norm_operator(r.g.truncate(r.degree, precision), 8);
    r.norm_invariance_digits = capped(agreement(ng, r.g), precision);
    return r;
}

}  // namespace excezero::coleman
