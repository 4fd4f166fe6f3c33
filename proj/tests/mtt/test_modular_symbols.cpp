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
#include "excezero/mtt/modular_symbols.hpp"
#include "mtt/tables.hpp"
#include "oracles/period_oracles.hpp"

using namespace excezero;
using mtt::ModularSymbolBuilder;

TEST_CASE("real period matches quadrature") {
    for (const auto& e : {oracle::c11a1(), oracle::c14a1(), oracle::c15a1(), oracle::c17a1()}) {
        CAPTURE(e.label());
        double lib = static_cast<double>(mtt::real_period(e));
        double ref = static_cast<double>(oracle::omega_by_quadrature(e));
        CHECK(lib == doctest::Approx(ref).epsilon(1e-9));
    }
    // reference value for 11a1
    CHECK(static_cast<double>(mtt::real_period(oracle::c11a1())) ==
          doctest::Approx(1.26920930427955).epsilon(1e-13));
}

TEST_CASE("[0]^+ is L(E,1)/Omega^+") {
    auto e = oracle::c11a1();
    auto t = testing_tables::table(e);
    CHECK(t->symbol(0, 1) == mpq_class(1, 5));

    auto an = oracle::an_by_counting(e, 400);
    long double ratio =
        oracle::l_value_by_series(an, 11, 1) / oracle::omega_by_quadrature(e);
    CHECK(static_cast<double>(ratio) == doctest::Approx(0.2).epsilon(1e-9));

    mtt::LevelData lv = mtt::level_data(e);
    CHECK(lv.conductor == 11);
    CHECK(lv.tame_level == 1);
    CHECK(lv.root_number == 1);
    auto big_an = tate::an_table(e, 2000);
    mtt::Real l = mtt::l_value_at_one(e, lv, big_an);
    CHECK(static_cast<double>(l / t->omega_plus()) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("L(E,1)/Omega^+ on the other curves") {
    // a rational with small denominator, positive for rank 0
    for (const auto& e : {oracle::c11a3(), oracle::c14a1(), oracle::c15a1(), oracle::c17a1()}) {
        CAPTURE(e.label());
        mtt::ModularSymbolBuilder b(e);
        b.require(1);
        auto t = b.freeze();
        mpq_class r = t->symbol(0, 1);
        auto lv = mtt::level_data(e);
        auto an = oracle::an_by_counting(e, 600);
        long double ref = oracle::l_value_by_series(an, lv.conductor, lv.root_number) /
                          oracle::omega_by_quadrature(e);
        CHECK(r.get_d() == doctest::Approx(static_cast<double>(ref)).epsilon(1e-8));
        CHECK(r > 0);
    }
}

TEST_CASE("[a/11]^+ for 11a1 against twisted Dirichlet L-values") {
    auto e = oracle::c11a1();
    auto t = testing_tables::table(e);
    auto ref = oracle::plus_symbols_mod_p(e, 1, oracle::omega_by_quadrature(e));
    for (long a = 1; a < 11; ++a) {
        CAPTURE(a);
        CHECK(t->symbol(a, 11).get_d() == doctest::Approx(static_cast<double>(ref[a])).epsilon(1e-8));
    }
    // frozen from the oracle above
    CHECK(t->symbol(1, 11) == 0);
    CHECK(t->symbol(2, 11) == 1);
    CHECK(t->symbol(3, 11) == mpq_class(1, 2));
    CHECK(t->symbol(4, 11) == mpq_class(-1, 2));
    CHECK(t->symbol(5, 11) == -1);
}

TEST_CASE("plus symbols are even and periodic") {
    std::mt19937_64 rng(7);
    auto e = oracle::c11a1();
    ModularSymbolBuilder b(e);
    std::vector<std::pair<long, long>> picks;
    for (int i = 0; i < 50; ++i) {
        long m = 2 + static_cast<long>(rng() % 40);
        long a = static_cast<long>(rng() % 1000) - 500;
        picks.push_back({a, m});
        b.require(m);
        for (long d = 1; d <= m; ++d) {
            if (m % d == 0) {
                b.require(d);
            }
        }
    }
    auto t = b.freeze();
    for (auto [a, m] : picks) {
        CAPTURE(a);
        CAPTURE(m);
        CHECK(t->symbol(a, m) == t->symbol(-a, m));
        CHECK(t->symbol(a + 7 * m, m) == t->symbol(a, m));
    }
}

TEST_CASE("Hecke relations") {
    auto e = oracle::c11a1();
    auto t = testing_tables::table(e);
    const long p = 11;
    SUBCASE("U_p at p exactly dividing the level") {
        for (long m = 1; m <= p * p; m *= p) {
            for (long a = 0; a < m; ++a) {
                if (m > 1 && a % p == 0) {
                    continue;
                }
                mpq_class s = 0;
                for (long j = 0; j < p; ++j) {
                    s += t->symbol(a + j * m, m * p);
                }
                CHECK(s == t->symbol(a, m));
            }
        }
    }
    SUBCASE("T_ell at good primes: sum_j [j/ell]^+ = (a_ell - 1) [0]^+") {
        ModularSymbolBuilder b(e);
        for (long ell : {2, 3, 5, 7, 13}) {
            b.require(ell);
        }
        b.require(1);
        auto tl = b.freeze();
        for (long ell : {2, 3, 5, 7, 13}) {
            CAPTURE(ell);
            mpq_class s = 0;
            for (long j = 0; j < ell; ++j) {
                s += tl->symbol(j, ell);
            }
            long a = ell + 1 - oracle::brute_force_count(e, ell);
            CHECK(s == (a - 1) * tl->symbol(0, 1));
        }
    }
}

TEST_CASE("denominators stay under the curve-level bound") {
    auto t = testing_tables::table(oracle::c11a1());
    CHECK(t->denominator_bound() == 10);
    CHECK(t->precision_record().worst_residual < mtt::Real("1e-50"));
}

TEST_CASE("table errors") {
    auto t = testing_tables::table(oracle::c11a1());
    CHECK_THROWS_AS(t->symbol(1, 7), LookupError);
    CHECK_THROWS_AS(ModularSymbolBuilder(oracle::c11a1()).require(0), DomainError);
    mtt::SymbolConfig low;
    low.digits = 5;
    CHECK_THROWS_AS(ModularSymbolBuilder(oracle::c11a1(), low), ValidationError);
    // a denominator bound of 1 cannot hold the half-integral symbols
    mtt::SymbolConfig tight;
    tight.max_denominator = 1;
    ModularSymbolBuilder b(oracle::c11a1(), tight);
    b.require(11);
    CHECK_THROWS_AS(b.freeze(), PrecisionError);
}

TEST_CASE("rational reconstruction") {
    mtt::Real x = mtt::Real(355) / 113;
    auto r = mtt::reconstruct_rational(x, mtt::Real("1e-30"), 1000);
    REQUIRE(r);
    CHECK(*r == mpq_class(355, 113));
    CHECK_FALSE(mtt::reconstruct_rational(mtt::real_pi(), mtt::Real("1e-30"), 1000));
    auto neg = mtt::reconstruct_rational(mtt::Real(-7) / 3, mtt::Real("1e-30"), 10);
    REQUIRE(neg);
    CHECK(*neg == mpq_class(-7, 3));
}
