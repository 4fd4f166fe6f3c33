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

#include "excezero/mtt/lfunction.hpp"

#include <algorithm>

#include "excezero/errors.hpp"
#include "excezero/padic/padic_functions.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::mtt {

using padic::padic_exp;
using padic::padic_expm1;
using padic::padic_log;

PadicNumber
tree_sum(std::vector<PadicNumber> terms) {
    if (terms.empty()) {
        return PadicNumber();
    }
    while (terms.size() > 1) {
        std::vector<PadicNumber> next;
        next.reserve((terms.size() + 1) / 2);
        for (size_t i = 0; i + 1 < terms.size(); i += 2) {
            next.push_back(terms[i] + terms[i + 1]);
        }
        if (terms.size() % 2 == 1) {
            next.push_back(terms.back());
        }
        terms = std::move(next);
    }
    return terms.front();
}

mpq_class
measure(const ModularSymbolTable& table, const mpz_class& a, int nu) {
    const long p = table.curve().p();
    if (nu < 1) {
        throw DomainError("measure level must be at least 1");
    }
    if (a % p == 0) {
        throw DomainError("the measure is supported on the units; p divides " + a.get_str());
    }
    const mpz_class& m = padic::prime_power(p, nu);
    if (!m.fits_slong_p()) {
        throw DomainError("measure level too deep");
    }
    return table.symbol(a, m.get_si());
}

namespace {

PadicNumber
rational_to_padic(long p, const mpq_class& r, int precision) {
    if (r == 0) {
        return PadicNumber::exact_zero(p);
    }
    return PadicNumber::from_rational(p, r, precision);
}

}  // namespace

PadicLFunction::PadicLFunction(std::shared_ptr<const ModularSymbolTable> table, int level,
                               int precision)
    : table_(std::move(table)), p_(table_->curve().p()), level_(level), precision_(precision) {
    if (level_ < 1) {
        throw DomainError("Riemann-sum level must be at least 1");
    }
    if (precision_ < 1) {
        throw ValidationError("precision must be positive");
    }
    const long m = padic::prime_power(p_, level_).get_si();
    if (!table_->has_denominator(m)) {
        throw LookupError("symbol table lacks denominator p^" + std::to_string(level_));
    }
    bool seen = false;
    for (long a = 1; a < m; ++a) {
        if (a % p_ == 0) {
            continue;
        }
        mpq_class mu = table_->symbol(a, m);
        total_ += mu;
        residues_.push_back(a);
        masses_.push_back(rational_to_padic(p_, mu, precision_));
        logs_.push_back(padic_log(PadicNumber::from_integer(p_, a, precision_)));
        if (mu != 0) {
            int v = padic::valuation(mu.get_num(), p_) - padic::valuation(mu.get_den(), p_);
            measure_valuation_ = seen ? std::min(measure_valuation_, v) : v;
            seen = true;
        }
    }
}

mpq_class
PadicLFunction::total_mass(int nu) const {
    const long m = padic::prime_power(p_, nu).get_si();
    mpq_class total = 0;
    for (long a = 1; a < m; ++a) {
        if (a % p_ != 0) {
            total += mtt::measure(*table_, a, nu);
        }
    }
    return total;
}

PadicNumber
PadicLFunction::sum_with_exponent(const PadicNumber& t) const {
    // sum mu_a exp(t log<a>) = total + sum mu_a expm1(t log<a>); the split
    // keeps an exactly vanishing total mass exact.
    std::vector<PadicNumber> terms;
    terms.reserve(residues_.size());
    for (size_t i = 0; i < residues_.size(); ++i) {
        terms.push_back(masses_[i] * padic_expm1(t * logs_[i]));
    }
    return rational_to_padic(p_, total_, precision_) + tree_sum(std::move(terms));
}

PadicNumber
PadicLFunction::value(const mpq_class& s) const {
    mpq_class t = s - 1;
    if (t == 0) {
        return sum_with_exponent(PadicNumber::exact_zero(p_));
    }
    if (padic::valuation(t.get_den(), p_) > 0) {
        throw DomainError("s must be a p-adic integer");
    }
    return sum_with_exponent(PadicNumber::from_rational(p_, t, precision_));
}

PadicNumber
PadicLFunction::value(const PadicNumber& s) const {
    if (!s.is_zero() && s.valuation() < 0) {
        throw DomainError("s must be a p-adic integer");
    }
    return sum_with_exponent(s - PadicNumber::one(p_, precision_));
}

PadicNumber
PadicLFunction::derivative_at_1() const {
    std::vector<PadicNumber> terms;
    terms.reserve(residues_.size());
    for (size_t i = 0; i < residues_.size(); ++i) {
        terms.push_back(masses_[i] * logs_[i]);
    }
    return tree_sum(std::move(terms));
}

PadicNumber
PadicLFunction::moment(int k, const PadicNumber& shift) const {
    if (k < 0) {
        throw DomainError("moment order must be nonnegative");
    }
    if (k == 0) {
        return rational_to_padic(p_, total_, precision_);
    }
    std::vector<PadicNumber> terms;
    terms.reserve(residues_.size());
    for (size_t i = 0; i < residues_.size(); ++i) {
        terms.push_back(masses_[i] * (logs_[i] + shift).pow(k));
    }
    return tree_sum(std::move(terms));
}

std::vector<PadicNumber>
PadicLFunction::iwasawa_coefficients(int count) const {
    PadicNumber log_gamma = padic_log(PadicNumber::from_integer(p_, 1 + p_, precision_ + 1));
    std::vector<PadicNumber> coeffs(count);
    std::vector<std::vector<PadicNumber>> terms(count);
    for (size_t i = 0; i < residues_.size(); ++i) {
        // ell_a = log<a>/log(1+p) is a p-adic integer; binomial(ell_a, k)
        // by the falling product.
        PadicNumber ell = logs_[i] / log_gamma;
        PadicNumber binom = PadicNumber::one(p_, precision_);
        for (int k = 0; k < count; ++k) {
            if (k > 0) {
                binom *= (ell - PadicNumber::from_integer(p_, k - 1, precision_));
                binom /= PadicNumber::from_integer(p_, k, precision_);
            }
            terms[k].push_back(masses_[i] * binom);
        }
    }
    for (int k = 0; k < count; ++k) {
        coeffs[k] = tree_sum(std::move(terms[k]));
    }
    if (total_ == 0 && count > 0) {
        coeffs[0] = PadicNumber::exact_zero(p_);
    }
    return coeffs;
}

int
PadicLFunction::error_tag(const PadicNumber& s) const {
    PadicNumber t = s - PadicNumber::one(p_, precision_);
    int ord_t = t.is_zero() ? t.precision() : t.valuation();
    if (t.is_exact_zero()) {
        return padic::kExactPrecision;
    }
    int loss = std::max(0, -measure_valuation_);
    return std::min(precision_, level_ + ord_t - loss);
}

int
PadicLFunction::derivative_error_tag() const {
    int loss = std::max(0, -measure_valuation_);
    return std::min(precision_, level_ - loss);
}

GreenbergStevensCheck
greenberg_stevens_check(const PadicLFunction& l, const tate::TateParameter& tate) {
    if (tate.p != l.p()) {
        throw ValidationError("Tate parameter taken at a different prime");
    }
    GreenbergStevensCheck out;
    out.derivative = l.derivative_at_1();
    out.l_invariant = tate.l_invariant;
    out.l_ratio = l.symbols().symbol(0, 1);
    out.predicted = tate.l_invariant * rational_to_padic(l.p(), out.l_ratio, l.precision());
    out.error_tag = l.derivative_error_tag();
    out.absolute_digits = padic::agreement(out.derivative, out.predicted);
    out.relative_digits = padic::relative_agreement(out.derivative, out.predicted);
    return out;
}

FunctionalEquationCheck
functional_equation_check(const PadicLFunction& l, const mpq_class& s, int sign) {
    if (sign != 1 && sign != -1) {
        throw ValidationError("sign must be +1 or -1");
    }
    const long p = l.p();
    const int n = l.precision();
    const long tame = l.symbols().level().tame_level;
    PadicNumber log_n = padic_log(PadicNumber::from_integer(p, tame, n));
    auto twist = [&](const mpq_class& x) {
        // <N>^x = exp(x log<N>)
        if (tame == 1 || x == 0) {
            return PadicNumber::one(p, n);
        }
        return padic_exp(PadicNumber::from_rational(p, x, n) * log_n, n);
    };
    FunctionalEquationCheck out;
    mpq_class half_s = s / 2;
    mpq_class half_reflected = (2 - s) / 2;
    out.lhs = twist(half_s) * l.value(s);
    out.rhs = PadicNumber::from_integer(p, -sign, n) * twist(half_reflected) *
              l.value(mpq_class(2 - s));
    out.residual = out.lhs - out.rhs;
    out.residual_valuation =
        out.residual.is_zero() ? out.residual.precision() : out.residual.valuation();
    mpq_class t = s - 1;
    out.error_tag = t == 0 ? padic::kExactPrecision
                           : l.error_tag(PadicNumber::from_rational(p, s, n));
    out.within_tag = out.residual_valuation >= out.error_tag;
    return out;
}

}  // namespace excezero::mtt
