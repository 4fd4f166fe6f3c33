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

#include "excezero/coleman/local_hom.hpp"

#include <algorithm>

#include "excezero/errors.hpp"
#include "excezero/padic/padic_functions.hpp"

namespace excezero::coleman {

namespace {

PadicNumber
log_one_plus_p(long p, int precision) {
    return padic::padic_log(PadicNumber::from_integer(p, 1 + p, precision + 1));
}

long
common_prime(const PadicNumber& a, const PadicNumber& b) {
    long p = a.prime() != 0 ? a.prime() : b.prime();
    if (p == 0) {
        throw ValidationError("a local homomorphism needs a prime");
    }
    if ((a.prime() != 0 && a.prime() != p) || (b.prime() != 0 && b.prime() != p)) {
        throw ValidationError("values over different primes");
    }
    return p;
}

}  // namespace

LocalHomClass::LocalHomClass(PadicNumber value_on_p, PadicNumber value_on_1_plus_p)
    : p_(common_prime(value_on_p, value_on_1_plus_p)),
      on_p_(std::move(value_on_p)),
      on_1_plus_p_(std::move(value_on_1_plus_p)) {
}

LocalHomClass
LocalHomClass::from_basis(const PadicNumber& a, const PadicNumber& b, int precision) {
    long p = common_prime(a, b);
    return LocalHomClass(b, a * log_one_plus_p(p, precision));
}

LocalHomClass
LocalHomClass::log_p(long p, int precision) {
    return LocalHomClass(PadicNumber::exact_zero(p), log_one_plus_p(p, precision));
}

LocalHomClass
LocalHomClass::ord_p(long p, int precision) {
    return LocalHomClass(PadicNumber::from_integer(p, 1, precision), PadicNumber::exact_zero(p));
}

LocalHomClass
LocalHomClass::branch_log(const tate::TateParameter& t, int precision) {
    return LocalHomClass(-t.l_invariant, log_one_plus_p(t.p, precision));
}

PadicNumber
LocalHomClass::log_coefficient() const {
    if (on_1_plus_p_.is_exact_zero()) {
        return PadicNumber::exact_zero(p_);
    }
    int n = std::max(on_1_plus_p_.precision(), 1) + 2;
    return on_1_plus_p_ / log_one_plus_p(p_, n);
}

PadicNumber
LocalHomClass::evaluate(const PadicNumber& x) const {
    if (x.is_zero()) {
        throw DomainError("a homomorphism on Q_p^* needs a nonzero argument");
    }
    PadicNumber out = PadicNumber::exact_zero(p_);
    if (!on_p_.is_exact_zero() && x.valuation() != 0) {
        // the valuation is an exact integer; give it more digits than on_p_ has
        int n = on_p_.precision() + 8;
        out = on_p_ * PadicNumber::from_integer(p_, x.valuation(), n);
    }
    PadicNumber a = log_coefficient();
    if (!a.is_exact_zero()) {
        out += a * padic::padic_log(x);
    }
    return out;
}

LocalHomClass
LocalHomClass::operator+(const LocalHomClass& other) const {
    return LocalHomClass(on_p_ + other.on_p_, on_1_plus_p_ + other.on_1_plus_p_);
}

LocalHomClass
LocalHomClass::scaled(const PadicNumber& alpha) const {
    return LocalHomClass(alpha * on_p_, alpha * on_1_plus_p_);
}

std::string
LocalHomClass::str() const {
    return "phi(p) = " + on_p_.str() + ", phi(1+p) = " + on_1_plus_p_.str();
}

PadicNumber
dual_exp_base(const LocalHomClass& phi) {
    return phi.log_coefficient();
}

PadicNumber
l_varsigma(long p, int precision) {
    PadicNumber one = PadicNumber::one(p, precision + 2);
    return log_one_plus_p(p, precision) * (one - PadicNumber::from_integer(p, p, precision + 2).inverse());
}

bool
DerivativeModel::equal() const {
    return padic::compare(from_value, from_dual_exp) == padic::Verdict::equal;
}

DerivativeModel
coleman_derivative_model(const LocalHomClass& z, const tate::TateParameter& t) {
    if (z.prime() != t.p) {
        throw ValidationError("homomorphism and Tate parameter over different primes");
    }
    if (!z.evaluate(t.q).is_zero()) {
        throw DomainError("not in Im(p^-): z(q) != 0");
    }
    const long p = t.p;
    int n = t.l_invariant.precision();
    PadicNumber l_inv = l_varsigma(p, n + 2).inverse();
    PadicNumber p_inv = PadicNumber::from_parts(p, -1, 1, n);
    DerivativeModel out;
    out.from_value = l_inv * z.evaluate(p_inv);
    out.from_dual_exp = t.l_invariant * dual_exp_base(z) * l_inv;
    out.digits = padic::agreement(out.from_value, out.from_dual_exp);
    return out;
}

}  // namespace excezero::coleman
