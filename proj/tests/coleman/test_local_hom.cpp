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

#include <doctest.h>

#include <random>

#include "excezero/coleman/local_hom.hpp"
#include "excezero/errors.hpp"
#include "excezero/padic/padic_functions.hpp"
#include "oracles/curves.hpp"
#include "oracles/padic_oracles.hpp"

using excezero::coleman::LocalHomClass;
using excezero::padic::agreement;
using excezero::padic::PadicNumber;

TEST_CASE("basis homomorphisms on p, 1 + p and roots of unity") {
    const long p = 7;
    const int n = 12;
    auto lg = LocalHomClass::log_p(p, n);
    auto od = LocalHomClass::ord_p(p, n);
    PadicNumber x = PadicNumber::from_integer(p, p * 3, n);
    CHECK(agreement(lg.evaluate(x), oracle::log_unit(p, 3, n)) >= n - 1);
    CHECK(agreement(od.evaluate(x), PadicNumber::from_integer(p, 1, n)) >= n);
    CHECK(lg.evaluate(excezero::padic::teichmuller(p, 3, n)).is_zero());
    CHECK(od.evaluate(excezero::padic::teichmuller(p, 3, n)).is_zero());
    CHECK_THROWS_AS(lg.evaluate(PadicNumber::zero(p, n)), excezero::DomainError);
}

TEST_CASE("dual exponential on the basis") {
    const long p = 5;
    const int n = 10;
    CHECK(agreement(excezero::coleman::dual_exp_base(LocalHomClass::log_p(p, n)),
                    PadicNumber::one(p, n)) >= n);
    CHECK(excezero::coleman::dual_exp_base(LocalHomClass::ord_p(p, n)).is_zero());
    auto t = excezero::tate::tate_period(oracle::c15a1(), p, n);
    CHECK(agreement(excezero::coleman::dual_exp_base(LocalHomClass::branch_log(t, n)),
                    PadicNumber::one(p, n)) >= n - 1);
}

TEST_CASE("decompose and recompose are inverse; evaluation is a homomorphism") {
    const long p = 5;
    const int n = 10;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        PadicNumber a = oracle::random_padic(rng, p, n, 0, 2);
        PadicNumber b = oracle::random_padic(rng, p, n, 0, 2);
        auto phi = LocalHomClass::from_basis(a, b, n + 4);
        CHECK(agreement(phi.log_coefficient(), a) >= n - 1);
        CHECK(agreement(phi.ord_coefficient(), b) >= n);
        auto again = LocalHomClass::from_basis(phi.log_coefficient(), phi.ord_coefficient(), n + 4);
        CHECK(agreement(again.value_on_p(), phi.value_on_p()) >= n - 1);
        CHECK(agreement(again.value_on_1_plus_p(), phi.value_on_1_plus_p()) >= n - 1);

        PadicNumber x = oracle::random_padic(rng, p, n + 4, 0, 3);
        PadicNumber y = oracle::random_padic(rng, p, n + 4, 0, 3);
        CHECK(agreement(phi.evaluate(x * y), phi.evaluate(x) + phi.evaluate(y)) >= n - 2);
        // phi = a log_p + b ord_p pointwise
        auto direct = a * excezero::padic::padic_log(x) +
                      b * PadicNumber::from_integer(p, x.valuation(), n + 4);
        CHECK(agreement(phi.evaluate(x), direct) >= n - 2);
    }
}

TEST_CASE("derivative model: both sides agree on the image of log_q") {
    const long p = 5;
    const int n = 12;
    auto t = excezero::tate::tate_period(oracle::c15a1(), p, n);
    auto base = LocalHomClass::branch_log(t, n + 2);
    CHECK(base.evaluate(t.q).is_zero());

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        PadicNumber alpha = oracle::random_padic(rng, p, n, 0, 3);
        auto z = base.scaled(alpha);
        auto m = excezero::coleman::coleman_derivative_model(z, t);
        CHECK(m.equal());
        CHECK(m.digits >= std::min(m.from_value.precision(), m.from_dual_exp.precision()));
        // value side is alpha L / l
        auto expected = alpha * t.l_invariant / excezero::coleman::l_varsigma(p, n + 2);
        CHECK(agreement(m.from_value, expected) >= m.from_value.precision() - 1);
    }

    CHECK_THROWS_AS(coleman_derivative_model(LocalHomClass::log_p(p, n), t), excezero::DomainError);
    CHECK_THROWS_AS(coleman_derivative_model(LocalHomClass::ord_p(p, n), t), excezero::DomainError);
}

TEST_CASE("derivative model on every split dataset prime") {
    for (auto e : {oracle::c11a1(), oracle::c11a3(), oracle::c14a1(), oracle::c17a1()}) {
        auto t = excezero::tate::tate_period(e, e.p(), 10);
        auto z = LocalHomClass::branch_log(t, 12).scaled(PadicNumber::from_integer(e.p(), 3, 10));
        auto m = excezero::coleman::coleman_derivative_model(z, t);
        CHECK(m.equal());
    }
}
