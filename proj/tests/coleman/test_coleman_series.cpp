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

#include "excezero/coleman/coleman_series.hpp"
#include "excezero/errors.hpp"
#include "excezero/padic/padic_functions.hpp"
#include "oracles/padic_oracles.hpp"

using excezero::coleman::construct_g;
using excezero::coleman::cyclotomic_log;
using excezero::coleman::PowerSeriesZp;
using excezero::coleman::SeriesRoute;
using excezero::padic::CyclotomicElement;
using excezero::padic::PadicNumber;

namespace {

CyclotomicElement
one_at(long p, int level, int precision) {
    return CyclotomicElement::from_padic(p, level, PadicNumber::one(p, precision));
}

PowerSeriesZp
random_unit_series(std::mt19937_64& rng, long p, int degree, int precision) {
    std::vector<PadicNumber> c;
    for (int i = 0; i < degree; ++i) {
        c.push_back(oracle::random_padic(rng, p, precision, 0, i == 0 ? 0 : 2));
    }
    return PowerSeriesZp::from_coefficients(p, std::move(c), degree);
}

}  // namespace

TEST_CASE("x_n: bottom level vanishes and the tower is trace compatible") {
    for (long p : {5L, 7L}) {
        auto xs = excezero::coleman::x_values(p, 1, 12);
        REQUIRE(xs.size() == 2);
        CHECK(xs[0].is_zero());
        CHECK(xs[1].trace_to_level(0).is_zero());
    }
    auto xs = excezero::coleman::x_values(5, 2, 10);
    CHECK(excezero::padic::agreement(xs[2].trace_to_level(1), xs[1]) >= 10);
}

TEST_CASE("x_1 at p = 5 matches exact evaluation in Q(mu_25)") {
    // Computed with rational arithmetic modulo Phi_25 using the Teichmuller
    // representatives 1, 7, 18, 24 of (Z/25)^*.
    const long expected[20] = {0, 1, 0, 0, -1, 0, 0, 1, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 1, -1};
    auto x1 = excezero::coleman::x_values(5, 1, 15)[1];
    REQUIRE(x1.degree() == 20);
    for (int i = 0; i < 20; ++i) {
        CHECK(excezero::padic::agreement(x1.coefficient(i),
                                         PadicNumber::from_integer(5, expected[i], 15)) >= 15);
    }
}

TEST_CASE("cyclotomic log: roots of unity, rational units, multiplicativity") {
    const long p = 5;
    const int n = 12;
    auto zeta = CyclotomicElement::zeta_power(p, 1, 1, n);
    CHECK(cyclotomic_log(zeta).coefficient_valuation() >= n - 3);

    PadicNumber u = PadicNumber::from_integer(p, 1 + p, n);
    auto lu = cyclotomic_log(CyclotomicElement::from_padic(p, 1, u));
    CHECK(excezero::padic::agreement(lu.coefficient(0), oracle::log_one_plus(p, p, n)) >= n - 1);
    for (long i = 1; i < lu.degree(); ++i) {
        CHECK(lu.coefficient(i).is_zero());
    }

    auto a = zeta * CyclotomicElement::from_padic(p, 1, u) + CyclotomicElement::zeta_power(p, 1, 3, n) *
                                                               PadicNumber::from_integer(p, p, n);
    auto b = one_at(p, 1, n) + (CyclotomicElement::zeta_power(p, 1, 2, n) - one_at(p, 1, n)) *
                                   PadicNumber::from_integer(p, 2 * p, n);
    auto lhs = cyclotomic_log(a * b);
    auto rhs = cyclotomic_log(a) + cyclotomic_log(b);
    CHECK(excezero::padic::agreement(lhs, rhs) >= n - 4);

    CHECK_THROWS_AS(cyclotomic_log(CyclotomicElement::from_padic(p, 1, PadicNumber::from_integer(p, 2, n))),
                    excezero::DomainError);
}

TEST_CASE("norm operator: fixed point, constants, multiplicativity") {
    const long p = 5;
    const int n = 6;
    const int deg = 80;
    PadicNumber one = PadicNumber::one(p, n);
    auto t1 = PowerSeriesZp::linear(p, one, one, deg);
    auto n1 = excezero::coleman::coleman_norm_operator(t1, 6);
    CHECK(agreement(n1, t1) >= n);

    PadicNumber c = PadicNumber::from_integer(p, 7, n);
    auto nc = excezero::coleman::coleman_norm_operator(PowerSeriesZp::constant(p, c, deg), 6);
    CHECK(excezero::padic::agreement(nc.coefficient(0), c.pow(p)) >= n);
    for (int i = 1; i < nc.degree(); ++i) {
        CHECK(nc.coefficient(i).is_zero());
    }

    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 4; ++trial) {
        auto f = random_unit_series(rng, p, deg, n);
        auto g = random_unit_series(rng, p, deg, n);
        auto nf = excezero::coleman::coleman_norm_operator(f, 4);
        auto ng = excezero::coleman::coleman_norm_operator(g, 4);
        auto nfg = excezero::coleman::coleman_norm_operator(f * g, 4);
        CHECK(agreement(nfg, nf * ng) >= nfg.precision());
        CHECK(nfg.precision() >= 2);
    }

    auto nonunit = PowerSeriesZp::linear(p, PadicNumber::from_integer(p, p, n), one, deg);
    CHECK_THROWS_AS(excezero::coleman::coleman_norm_operator(nonunit), excezero::DomainError);
}

TEST_CASE("g: both routes agree and the defining properties hold") {
    for (long p : {5L, 7L}) {
        const int n = 8;
        const int deg = excezero::coleman::default_degree(p, n, 1);
        auto a = construct_g(p, deg, n, SeriesRoute::closed_form);
        auto b = construct_g(p, deg, n, SeriesRoute::conjugate_sum);
        CHECK(agreement(a, b) >= n);

        // g lies in 1 + (p, X) and log g(0) = p
        CHECK(excezero::padic::agreement(a.coefficient(0), PadicNumber::one(p, n)) >= 1);
        CHECK(excezero::padic::agreement(excezero::padic::padic_log(a.coefficient(0)),
                                         PadicNumber::from_integer(p, p, n)) >= n);
        // exp(p) through an exact rational series
        CHECK(excezero::padic::agreement(a.coefficient(0), oracle::exp_of(p, p, n)) >= n);

        // norm compatibility of the evaluated units and their logs
        auto units = excezero::coleman::evaluate_units(a, 1);
        CHECK(excezero::padic::agreement(units.units[0], one_at(p, 0, n)) >= n - 1);
        CHECK(units.norm_agreement(1, 0) >= n - 1);
        auto xs = excezero::coleman::x_values(p, 1, n);
        CHECK(excezero::padic::agreement(cyclotomic_log(units.units[1]), xs[1]) >= n - 2);
    }
}

TEST_CASE("g is invariant under the norm operator in low degree") {
    const long p = 5;
    const int n = 6;
    auto g = construct_g(p, excezero::coleman::default_degree(p, n, 1), n, SeriesRoute::closed_form);
    auto ng = excezero::coleman::coleman_norm_operator(g, 10);
    CHECK(ng.degree() >= 5);
    CHECK(agreement(ng, g) >= n);
    // a perturbed series is not fixed
    auto h = g * PowerSeriesZp::linear(p, PadicNumber::one(p, n), PadicNumber::from_integer(p, p, n),
                                       g.degree());
    CHECK(agreement(excezero::coleman::coleman_norm_operator(h, 10), h) < n);
}

TEST_CASE("evaluation commutes with the relative norm for a norm-invariant series") {
    const long p = 5;
    const int n = 5;
    auto g = construct_g(p, excezero::coleman::default_degree(p, n + 2, 2), n + 2,
                         SeriesRoute::closed_form);
    auto units = excezero::coleman::evaluate_units(g, 2);
    CHECK(units.norm_agreement(1, 0) >= n);
    CHECK(units.norm_agreement(2, 1) >= n);
    CHECK(units.norm_agreement(2, 0) >= n);
}

TEST_CASE("ord(c'): closed form, product with l, stability in the degree") {
    for (long p : {5L, 7L}) {
        const int n = 8;
        const int deg = excezero::coleman::default_degree(p, n, 0);
        auto g = construct_g(p, deg, n, SeriesRoute::closed_form);
        auto g10 = construct_g(p, deg + 10, n, SeriesRoute::closed_form);
        auto o = excezero::coleman::ord_c_prime(g);
        auto o10 = excezero::coleman::ord_c_prime(g10);
        CHECK(o.digits >= n - 1);
        CHECK(excezero::padic::agreement(o.ord, o10.ord) >= n - 1);
        PadicNumber expected = PadicNumber::from_integer(p, p, n + 2) /
                               (PadicNumber::from_integer(p, p - 1, n + 2) *
                                oracle::log_one_plus(p, p, n + 2));
        CHECK(excezero::padic::agreement(o.ord, expected) >= n - 1);
    }
    auto bad = PowerSeriesZp::constant(5, PadicNumber::from_integer(5, 2, 8), 4);
    CHECK_THROWS_AS(excezero::coleman::ord_c_prime(bad), excezero::DomainError);
}

TEST_CASE("construction rejects small primes and bad sizes") {
    CHECK_THROWS_AS(construct_g(3, 20, 5, SeriesRoute::closed_form), excezero::DomainError);
    CHECK_THROWS_AS(construct_g(4, 20, 5, SeriesRoute::closed_form), excezero::DomainError);
    CHECK_THROWS_AS(construct_g(5, 0, 5, SeriesRoute::closed_form), excezero::ValidationError);
}

TEST_CASE("full verification report") {
    for (long p : {5L, 7L}) {
        auto r = excezero::coleman::verify_coleman(p, 8, 1);
        CHECK(r.passed());
        CHECK(r.log_g0_digits == 8);
        CHECK(r.uniqueness_digits == 8);
    }
}
