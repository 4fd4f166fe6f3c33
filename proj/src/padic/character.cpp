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

#include "excezero/padic/character.hpp"

#include "excezero/errors.hpp"
#include "excezero/padic/padic_functions.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::padic {

PadicCharacter::PadicCharacter(long p, int m, long e) : p_(p), m_(m), e_(0), pm_(1) {
    if (p < 5 || !is_prime(p)) {
        throw DomainError("character needs a prime p >= 5");
    }
    if (m < 0) {
        throw DomainError("character level must be >= 0");
    }
    for (int i = 0; i < m; ++i) {
        pm_ *= p;
    }
    e_ = ((e % pm_) + pm_) % pm_;
}

long
PadicCharacter::conductor() const {
    if (e_ == 0) {
        return 1;
    }
    long c = p_ * pm_;
    for (long e = e_; e % p_ == 0; e /= p_) {
        c /= p_;
    }
    return c;
}

long
PadicCharacter::order() const {
    long g = pm_;
    long e = e_;
    while (e != 0) {
        long t = g % e;
        g = e;
        e = t;
    }
    return pm_ / g;
}

long
PadicCharacter::zeta_exponent(const mpz_class& a) const {
    if (a % p_ == 0) {
        throw DomainError("character evaluated at a non-unit");
    }
    if (m_ == 0 || e_ == 0) {
        return 0;
    }
    int prec = m_ + 1;
    PadicNumber u = principal_unit_part(PadicNumber::from_integer(p_, a, prec));
    PadicNumber gamma = PadicNumber::from_integer(p_, 1 + p_, prec);
    // <a> = (1+p)^l with l = log<a>/log(1+p), known modulo p^m.
    PadicNumber l = padic_log(u) / padic_log(gamma);
    long ell = l.is_zero() ? 0 : mpz_fdiv_ui(l.to_integer().get_mpz_t(), pm_);
    return (p_ * ((e_ * ell) % pm_)) % (p_ * pm_);
}

CyclotomicElement
PadicCharacter::value(const mpz_class& a, int precision) const {
    return CyclotomicElement::zeta_power(p_, m_, zeta_exponent(a), precision);
}

PadicCharacter
PadicCharacter::power(long b) const {
    return PadicCharacter(p_, m_, (e_ * (b % pm_ + pm_)) % pm_);
}

CyclotomicElement
gauss_sum(const PadicCharacter& chi, int precision) {
    long p = chi.prime();
    long q = p;
    for (int i = 0; i < chi.m(); ++i) {
        q *= p;
    }
    std::vector<long> counts(q, 0);
    for (long a = 1; a < q; ++a) {
        if (a % p == 0) {
            continue;
        }
        counts[(chi.zeta_exponent(a) + a) % q] += 1;
    }
    std::vector<PadicNumber> by_exponent(q, PadicNumber::exact_zero(p));
    for (long k = 0; k < q; ++k) {
        if (counts[k] != 0) {
            by_exponent[k] = PadicNumber::from_integer(p, counts[k], precision);
        }
    }
    return CyclotomicElement::from_exponents(p, chi.m(), by_exponent);
}

}  // namespace excezero::padic
