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

#include "excezero/errors.hpp"
#include "excezero/mtt/lfunction.hpp"
#include "excezero/padic/padic_functions.hpp"
#include "excezero/padic/prime_powers.hpp"
#include "excezero/tate/tate_period.hpp"
#include "mtt/tables.hpp"
#include "oracles/padic_oracles.hpp"

using namespace excezero;
using mtt::PadicLFunction;
using padic::PadicNumber;

namespace {

std::vector<excezero::tate::CurveData>
dataset() {
    return {oracle::c11a1(), oracle::c11a3(), oracle::c14a1(), oracle::c15a1(), oracle::c17a1()};
}

}  // namespace

TEST_CASE("measure support and total mass") {
    auto t = testing_tables::table(oracle::c11a1());
    CHECK_THROWS_AS(mtt::measure(*t, 22, 1), DomainError);
    CHECK_THROWS_AS(mtt::measure(*t, 1, 0), DomainError);
    for (const auto& e : dataset()) {
        CAPTURE(e.label());
        auto te = testing_tables::table(e);
        PadicLFunction l(te, 1, 10);
        for (int nu = 1; nu <= 3; ++nu) {
            CHECK(l.total_mass(nu) == 0);
        }
    }
    // the ball 1 + 11 Z_p carries [1/11]^+
    CHECK(mtt::measure(*t, 1, 1) == 0);
    CHECK(mtt::measure(*t, 2, 1) == 1);
}

TEST_CASE("distribution property, exact") {
    std::mt19937_64 rng(11);
    for (const auto& e : dataset()) {
        CAPTURE(e.label());
        auto t = testing_tables::table(e);
        const long p = e.p();
        for (int nu = 1; nu <= 2; ++nu) {
            long m = nu == 1 ? p : p * p;
            for (int trial = 0; trial < 40; ++trial) {
                long a = 1 + static_cast<long>(rng() % (m - 1));
                if (a % p == 0) {
                    continue;
                }
                mpq_class refined = 0;
                for (long j = 0; j < p; ++j) {
                    refined += mtt::measure(*t, a + j * m, nu + 1);
                }
                CHECK(refined == mtt::measure(*t, a, nu));
            }
        }
    }
}

TEST_CASE("trivial zero is exact") {
    for (const auto& e : dataset()) {
        CAPTURE(e.label());
        auto t = testing_tables::table(e);
        for (int nu = 1; nu <= 3; ++nu) {
            PadicLFunction l(t, nu, 12);
            PadicNumber v = l.value(mpq_class(1));
            CHECK(v.is_exact_zero());
            CHECK(v.str() == "0");
            CHECK(mtt::lp_value(l, mpq_class(1)).is_exact_zero());
        }
    }
}

TEST_CASE("Riemann sums stabilise across levels") {
    for (const auto& e : dataset()) {
        CAPTURE(e.label());
        auto t = testing_tables::table(e);
        std::vector<PadicNumber> v;
        for (int nu = 1; nu <= 3; ++nu) {
            v.push_back(PadicLFunction(t, nu, 12).value(mpq_class(2)));
        }
        // |L(2, nu+1) - L(2, nu)| <= p^-(nu-1), and in fact a digit better
        CHECK(padic::agreement(v[0], v[1]) >= 1);
        CHECK(padic::agreement(v[1], v[2]) >= 2);
        PadicNumber d2 = PadicLFunction(t, 2, 12).derivative_at_1();
        PadicNumber d3 = PadicLFunction(t, 3, 12).derivative_at_1();
        CHECK(padic::agreement(d2, d3) >= 2);
    }
}

TEST_CASE("value agrees with the exponential series weights") {
    auto e = oracle::c11a1();
    auto t = testing_tables::table(e);
    PadicLFunction l(t, 2, 10);
    const long p = 11;
    // direct: sum mu_a <a>^(s-1) with <a>^(s-1) from the oracle exp/log
    for (long s : {2L, 0L, 1 + p, -5L}) {
        CAPTURE(s);
        PadicNumber direct = PadicNumber::exact_zero(p);
        for (long a = 1; a < p * p; ++a) {
            if (a % p == 0) {
                continue;
            }
            mpq_class mu = mtt::measure(*t, a, 2);
            if (mu == 0) {
                continue;
            }
            mpz_class lg = oracle::log_unit(p, a, 14).to_integer();
            PadicNumber w = oracle::exp_of(p, lg * (s - 1), 14);
            direct += PadicNumber::from_rational(p, mu, 10) * w;
        }
        CHECK(padic::agreement(l.value(mpq_class(s)), direct) >= 9);
    }
}

TEST_CASE("p-adic and rational arguments agree") {
    auto t = testing_tables::table(oracle::c15a1());
    PadicLFunction l(t, 3, 15);
    for (long s : {2L, 7L, -3L}) {
        CHECK(padic::agreement(l.value(mpq_class(s)), l.value(PadicNumber::from_integer(5, s, 15))) >=
              14);
    }
    CHECK_THROWS_AS(l.value(mpq_class(1, 5)), DomainError);
}

TEST_CASE("Lipschitz in s") {
    std::mt19937_64 rng(5);
    auto t = testing_tables::table(oracle::c14a1());
    PadicLFunction l(t, 2, 12);
    const long p = 7;
    for (int trial = 0; trial < 20; ++trial) {
        long s1 = static_cast<long>(rng() % 2000) - 1000;
        long s2 = static_cast<long>(rng() % 2000) - 1000;
        if (s1 == s2) {
            continue;
        }
        int ord = padic::valuation(mpz_class(s1 - s2), p);
        // log<a> has ord >= 1, so the weights move by at least p^(ord+1)
        CHECK(padic::agreement(l.value(mpq_class(s1)), l.value(mpq_class(s2))) >=
              std::min(12, ord + 1 + l.measure_valuation()));
    }
}

TEST_CASE("derivative is the first moment") {
    auto t = testing_tables::table(oracle::c11a1());
    PadicLFunction l(t, 3, 12);
    CHECK(padic::compare(l.derivative_at_1(), l.moment(1)) == padic::Verdict::equal);
    // zeroth moment is the total mass
    CHECK(l.moment(0).is_zero());
    // linear term of L(1 + h) for h = p^k: (L(1+h) - 0)/h -> L'(1)
    PadicNumber h = PadicNumber::from_integer(11, 11 * 11 * 11, 12);
    PadicNumber quotient = l.value(mpq_class(1 + 11 * 11 * 11)) / h;
    CHECK(padic::agreement(quotient, l.derivative_at_1()) >= 3);
}

TEST_CASE("Iwasawa coefficients") {
    auto t = testing_tables::table(oracle::c11a1());
    PadicLFunction l(t, 3, 12);
    auto c = l.iwasawa_coefficients(3);
    CHECK(c[0].is_exact_zero());
    // L_p(s) = f((1+p)^(s-1) - 1), so f'(0) log(1+p) = L_p'(1)
    PadicNumber lg = padic::padic_log(PadicNumber::from_integer(11, 12, 13));
    CHECK(padic::agreement(c[1] * lg, l.derivative_at_1()) >= 10);
}

TEST_CASE("exceptional-zero derivative at level 3") {
    for (const auto& e : {oracle::c11a1(), oracle::c14a1(), oracle::c15a1()}) {
        CAPTURE(e.label());
        auto t = testing_tables::table(e);
        PadicLFunction l(t, 3, 12);
        auto tp = tate::tate_period(e, e.p(), 12);
        auto gs = mtt::greenberg_stevens_check(l, tp);
        CHECK(gs.relative_digits >= 2);
        CHECK(gs.absolute_digits >= gs.error_tag);
    }
}

TEST_CASE("functional equation residual") {
    for (const auto& e : dataset()) {
        CAPTURE(e.label());
        auto t = testing_tables::table(e);
        PadicLFunction l(t, 3, 12);
        auto at1 = mtt::functional_equation_check(l, mpq_class(1), e.sign());
        CHECK(at1.lhs.is_exact_zero());
        CHECK(at1.rhs.is_exact_zero());
        auto fe = mtt::functional_equation_check(l, mpq_class(1 + e.p()), e.sign());
        CHECK(fe.within_tag);
        // the opposite sign fails
        auto wrong = mtt::functional_equation_check(l, mpq_class(1 + e.p()), -e.sign());
        CHECK_FALSE(wrong.within_tag);
    }
}

TEST_CASE("even centred moments vanish for sign +1") {
    // G(x) = <N>^(x/2) L_p(1+x) is odd, so sum mu_a (log<a> + log<N>/2)^k = 0 for even k
    auto e = oracle::c14a1();
    auto t = testing_tables::table(e);
    PadicLFunction l(t, 3, 12);
    PadicNumber half_log_n =
        padic::padic_log(PadicNumber::from_integer(7, 2, 13)) / PadicNumber::from_integer(7, 2, 13);
    PadicNumber m2 = l.moment(2, half_log_n);
    PadicNumber m1 = l.moment(1, half_log_n);
    int v1 = m1.is_zero() ? m1.precision() : m1.valuation();
    int v2 = m2.is_zero() ? m2.precision() : m2.valuation();
    CHECK(v2 >= l.level() + 2);
    CHECK(v1 < v2);
}

TEST_CASE("tree sum has a fixed shape") {
    std::vector<PadicNumber> xs;
    for (int i = 1; i <= 9; ++i) {
        xs.push_back(PadicNumber::from_integer(5, i * 5, 4 + i % 3));
    }
    PadicNumber a = mtt::tree_sum(xs);
    PadicNumber b = mtt::tree_sum(xs);
    CHECK(a.identical(b));
    CHECK(a.to_integer() == 225 % 625);
    CHECK(mtt::tree_sum({}).is_exact_zero());
}
