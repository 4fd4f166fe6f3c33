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
#include "excezero/jets/jet2.hpp"
#include "excezero/jets/laurent_poly.hpp"
#include "oracles/padic_oracles.hpp"

using excezero::jets::Jet2;
using excezero::jets::LaurentPoly;
using excezero::padic::PadicNumber;
using Q = mpq_class;

namespace {

Q
random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Jet2<Q>
random_jet(std::mt19937_64& rng, int order = 3) {
    Jet2<Q> j(order);
    for (int i = 0; i <= order; ++i) {
        for (int k = 0; i + k <= order; ++k) {
            j.set(i, k, random_q(rng));
        }
    }
    return j;
}

Jet2<PadicNumber>
random_padic_jet(std::mt19937_64& rng, long p, int order = 3) {
    Jet2<PadicNumber> j(order);
    for (int i = 0; i <= order; ++i) {
        for (int k = 0; i + k <= order; ++k) {
            j.set(i, k, oracle::random_padic(rng, p, 12, 0, 2));
        }
    }
    return j;
}

LaurentPoly
random_poly(std::mt19937_64& rng) {
    const char* names[3] = {"a", "b", "c"};
    LaurentPoly r;
    std::uniform_int_distribution<int> e(-2, 2);
    for (int t = 0; t < 3; ++t) {
        LaurentPoly m(random_q(rng));
        for (const char* n : names) {
            m *= LaurentPoly::symbol(n, e(rng));
        }
        r += m;
    }
    return r;
}

}  // namespace

TEST_CASE("Laurent polynomials: ring laws, units, substitution") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_poly(rng);
        auto y = random_poly(rng);
        auto z = random_poly(rng);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK((x - x).is_zero());
    }
    auto a = LaurentPoly::symbol("a");
    auto m = a.pow(3) * LaurentPoly(Q(-2, 3)) * LaurentPoly::symbol("b", -1);
    CHECK(m * m.inverse() == LaurentPoly(1L));
    CHECK_THROWS_AS((a + LaurentPoly(1L)).inverse(), excezero::DomainError);
    CHECK((a + LaurentPoly(1L)).pow(2) == a * a + a * LaurentPoly(2L) + LaurentPoly(1L));

    // substitution is a ring homomorphism
    auto s = LaurentPoly::symbol("b") * LaurentPoly::symbol("c") * LaurentPoly(3L);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_poly(rng);
        auto y = random_poly(rng);
        CHECK((x * y).substitute("a", s) == x.substitute("a", s) * y.substitute("a", s));
    }
    CHECK(a.substitute("a", LaurentPoly(5L)) == LaurentPoly(5L));
    CHECK((a * LaurentPoly::symbol("b", -1)).evaluate({{"a", Q(3)}, {"b", Q(2)}}) == Q(3, 2));
    CHECK_THROWS_AS(a.evaluate(std::map<std::string, Q>{}), excezero::LookupError);
    CHECK(LaurentPoly().str() == "0");
    CHECK((a * LaurentPoly(Q(-1, 2))).str() == "-1/2*a");
}

TEST_CASE("jets: ring laws modulo the truncation") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_jet(rng);
        auto g = random_jet(rng);
        auto h = random_jet(rng);
        CHECK((f * (g + h)).equals(f * g + f * h));
        CHECK(((f * g) * h).equals(f * (g * h)));
        CHECK((f * g).equals(g * f));
        CHECK((f - f).is_zero());
    }
    // u^2 * v^2 vanishes at order 3
    auto u2 = Jet2<Q>::monomial(2, 0, Q(1));
    auto v2 = Jet2<Q>::monomial(0, 2, Q(1));
    CHECK((u2 * v2).is_zero());
    CHECK_THROWS_AS(Jet2<Q>(-1), excezero::ValidationError);
}

TEST_CASE("jets: the four substitutions are ring homomorphisms") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = random_jet(rng);
        auto g = random_jet(rng);
        CHECK((f * g).restrict_central().equals(f.restrict_central() * g.restrict_central()));
        CHECK((f * g).restrict_weight_two().equals(f.restrict_weight_two() * g.restrict_weight_two()));
        CHECK((f * g).restrict_s_one().equals(f.restrict_s_one() * g.restrict_s_one()));
        CHECK((f * g).reflect().equals(f.reflect() * g.reflect()));
        CHECK((f + g).reflect().equals(f.reflect() + g.reflect()));
        // s -> k - s is an involution
        CHECK(f.reflect().reflect().equals(f));
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_padic_jet(rng, 7);
        auto g = random_padic_jet(rng, 7);
        CHECK((f * g).restrict_central().equals(f.restrict_central() * g.restrict_central()));
        CHECK((f * g).reflect().equals(f.reflect() * g.reflect()));
    }
}

TEST_CASE("jets: substitutions on monomials") {
    // (s-1) on s = k/2 is (k-2)/2; on s -> k - s it is (k-2) - (s-1)
    auto v = Jet2<Q>::monomial(0, 1, Q(1));
    CHECK(v.restrict_central().coefficient(1, 0) == Q(1, 2));
    auto r = v.reflect();
    CHECK(r.coefficient(1, 0) == 1);
    CHECK(r.coefficient(0, 1) == -1);
    CHECK(v.restrict_s_one().is_zero());
    CHECK(Jet2<Q>::monomial(1, 0, Q(1)).restrict_weight_two().is_zero());
}

TEST_CASE("jets: derivatives, Leibniz rule, exp") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_jet(rng);
        auto g = random_jet(rng);
        CHECK((f * g).d_dk().equals(f.d_dk() * g + f * g.d_dk()));
        CHECK((f * g).d_ds().equals(f.d_ds() * g + f * g.d_ds()));
    }
    auto f = Jet2<Q>::monomial(2, 1, Q(3, 5));
    CHECK(f.derivative(2, 1) == Q(6, 5));
    CHECK_THROWS_AS(f.derivative(3, 1), excezero::PrecisionError);

    // (E(x) + 1)(E(y) + 1) = E(x + y) + 1 for E = exp - 1
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_jet(rng);
        auto y = random_jet(rng);
        x.set(0, 0, Q(0));
        y.set(0, 0, Q(0));
        auto one = Jet2<Q>::monomial(0, 0, Q(1));
        auto lhs = (exp_minus_one(x) + one) * (exp_minus_one(y) + one);
        CHECK(lhs.equals(exp_minus_one(x + y) + one));
    }
    CHECK_THROWS_AS(exp_minus_one(Jet2<Q>::monomial(0, 0, Q(1))), excezero::DomainError);
}

TEST_CASE("jets: division in k - 2") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Jet2<Q> a(3);
        Jet2<Q> g(3);
        for (int i = 0; i <= 3; ++i) {
            a.set(i, 0, random_q(rng));
            g.set(i, 0, i == 0 ? Q(0) : random_q(rng));
        }
        if (g.coefficient(1, 0) == 0) {
            g.set(1, 0, Q(1));
        }
        auto f = a * g;
        auto q = divide_in_k(f, g);
        CHECK(q.order() == 2);
        CHECK(q.equals(a));
    }
    auto u = Jet2<Q>::monomial(1, 0, Q(1));
    CHECK_THROWS_AS(divide_in_k(Jet2<Q>::monomial(0, 0, Q(1)), u), excezero::DomainError);
    CHECK_THROWS_AS(divide_in_k(Jet2<Q>::monomial(0, 1, Q(1)), u), excezero::DomainError);
}
