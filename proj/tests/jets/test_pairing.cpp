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

#include "excezero/errors.hpp"
#include "excezero/jets/derivations.hpp"
#include "excezero/jets/lfunction_jets.hpp"
#include "excezero/jets/pairing.hpp"

using excezero::jets::Jet2;
using excezero::jets::kTatePeriod;
using excezero::jets::LaurentPoly;
using excezero::jets::PairingTable;
using P = LaurentPoly;
using Q = mpq_class;

namespace {

P
sym(const char* n) {
    return P::symbol(n);
}

}  // namespace

TEST_CASE("pairing values on the basis classes") {
    auto t = PairingTable<P>::generic({"z"});
    auto qq = hw_pairing(kTatePeriod, kTatePeriod, t);
    CHECK(qq.coefficient(0, 1) == sym("L"));
    CHECK(qq.coefficient(1, 0) == sym("L") * P(Q(-1, 2)));

    auto zq = hw_pairing("z", kTatePeriod, t);
    CHECK(zq.coefficient(0, 1) == sym("lambda_z"));
    CHECK(zq.coefficient(1, 0) == -sym("lambda_z"));
    CHECK(hw_pairing(kTatePeriod, "z", t).coefficient(1, 0).is_zero());

    PairingTable<Q> zero(Q(0));
    zero.add_class("x", Q(0));
    zero.set_cyc("x", "x", Q(0));
    zero.set_wt("x", "x", Q(0));
    CHECK(hw_pairing("x", "x", zero).is_zero());
    CHECK_THROWS_AS(hw_pairing("y", "x", zero), excezero::LookupError);
    CHECK_THROWS_AS(zero.add_class(kTatePeriod, Q(1)), excezero::ValidationError);
}

TEST_CASE("extended height equals the expanded determinant") {
    auto t = PairingTable<P>::generic({"x"});
    auto h = extended_height("x", t);
    P L = sym("L");
    P c = sym("c_x_x");
    P w = sym("w_x_x");
    P l2 = sym("lambda_x").pow(2);
    // expanded by hand from the 2 x 2 determinant
    CHECK(h.coefficient(0, 2) == L * c - l2);
    CHECK(h.coefficient(1, 1) == L * w - L * c * P(Q(1, 2)) + l2);
    CHECK(h.coefficient(2, 0) == -(L * w * P(Q(1, 2))));
    CHECK(h.valuation() == 2);
    CHECK(h.homogeneous(2).equals(h));
    CHECK_THROWS_AS(extended_height("x", t, 1), excezero::PrecisionError);
}

TEST_CASE("functional-equation constraint on numeric tables") {
    auto make = [](Q c, Q w) {
        PairingTable<Q> t(Q(3));
        t.add_class("x", Q(5));
        t.set_cyc("x", "x", c);
        t.set_wt("x", "x", w);
        return t;
    };
    CHECK(functional_equation_constraint(make(2, -1)).consistent);
    auto bad = functional_equation_constraint(make(2, 0));
    CHECK_FALSE(bad.consistent);
    int failing = 0;
    for (const auto& r : bad.relations) {
        if (!r.holds) {
            ++failing;
            CHECK(r.value == 2);
            CHECK(r.monomial == "k-2");
        }
    }
    CHECK(failing == 1);
}

TEST_CASE("central-critical pairing is skew on generic two-class tables") {
    auto t = impose_functional_equation(PairingTable<P>::generic({"x", "y"}));
    CHECK(functional_equation_constraint(t).consistent);
    for (const char* a : {"x", "y"}) {
        for (const char* b : {"x", "y"}) {
            auto lhs = hw_pairing(a, b, t).restrict_central();
            auto rhs = -hw_pairing(b, a, t).restrict_central();
            CHECK(lhs.equals(rhs));
        }
        auto aq = hw_pairing(a, kTatePeriod, t).restrict_central();
        CHECK(aq.equals(-hw_pairing(kTatePeriod, a, t).restrict_central()));
    }
}

TEST_CASE("every derivation holds exactly") {
    for (const auto& d : excezero::jets::derive_all()) {
        CAPTURE(d.id);
        CHECK(d.holds);
        CHECK(d.derived == d.expected);
        CHECK_FALSE(d.steps.empty());
    }
    CHECK_THROWS_AS(excezero::jets::derive("nope"), excezero::LookupError);
}

TEST_CASE("derived constants on the two restriction lines") {
    auto cyc = excezero::jets::derive("cyclotomic-line");
    REQUIRE(cyc.constants.size() == 2);
    CHECK(cyc.constants[0].matches);        // 2 l2 ord_q
    CHECK_FALSE(cyc.constants[1].matches);  // 2 l2 / ord_q
    auto wt = excezero::jets::derive("weight-line");
    REQUIRE(wt.constants.size() == 4);
    CHECK(wt.constants[0].matches);        // l4 w
    CHECK_FALSE(wt.constants[1].matches);  // 2 l4 w
    CHECK(wt.constants[2].matches);        // -l4 c / 2
    CHECK_FALSE(wt.constants[3].matches);  // -l4 c
}

TEST_CASE("first-order jet and the improved factor") {
    using excezero::jets::improved_factor;
    using excezero::jets::rubin_jet;
    auto zero = rubin_jet(P(), sym("ord_q"), sym("e"), sym("L"));
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(rubin_jet(sym("x"), P(), sym("e"), sym("L")), excezero::DomainError);

    // -1/2 Lp c1 (k-2)^2 -> c1 (k-2)
    auto jl = Jet2<P>::monomial(2, 0, -(sym("Lp") * sym("c1") * P(Q(1, 2))));
    auto lstar = improved_factor(jl, sym("Lp"));
    CHECK(lstar.coefficient(0, 0).is_zero());
    CHECK(lstar.derivative(1, 0) == sym("c1"));
    CHECK_THROWS_AS(improved_factor(Jet2<P>::monomial(0, 0, P(1L)), sym("Lp")), excezero::DomainError);
    CHECK_THROWS_AS(improved_factor(Jet2<P>::monomial(0, 1, P(1L)), sym("Lp")), excezero::DomainError);
    // nonzero value of L*: its slope is not determined by the linear divisor term
    auto simple = improved_factor(Jet2<P>::monomial(1, 0, P(1L)), sym("Lp"));
    CHECK(simple.order() == 0);
    CHECK(simple.coefficient(0, 0) == sym("Lp").inverse() * P(-2L));
}

TEST_CASE("Mellin jets of the basic monomials") {
    using excezero::jets::mellin_jet;
    P g = sym("g");
    std::vector<std::vector<P>> varpi{{P()}, {P(1L)}};
    auto j = mellin_jet(varpi, g, sym("x"));
    CHECK(j.coefficient(1, 0) == g);
    CHECK(j.coefficient(2, 0) == g.pow(2) * P(Q(1, 2)));
    CHECK(j.coefficient(3, 0) == g.pow(3) * P(Q(1, 6)));
    std::vector<std::vector<P>> both{{P(), P()}, {P(), P(1L)}};
    auto k = mellin_jet(both, g, g);
    CHECK(k.valuation() == 2);
    CHECK(k.coefficient(1, 1) == g.pow(2));
    CHECK(k.coefficient(2, 0).is_zero());
}
