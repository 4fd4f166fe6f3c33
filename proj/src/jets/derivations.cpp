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

#include "excezero/jets/derivations.hpp"

#include "excezero/errors.hpp"
#include "excezero/jets/lfunction_jets.hpp"
#include "excezero/jets/pairing.hpp"

namespace excezero::jets {

namespace {

using P = LaurentPoly;
using J = Jet2<LaurentPoly>;

const std::string kX = "x";

P
sym(const std::string& name) {
    return P::symbol(name);
}

P
half(const P& x) {
    return x * P(mpq_class(1, 2));
}

// L -> Lp * ord_q
P
split_log_q(const P& x) {
    return x.substitute("L", sym("Lp") * sym("ord_q"));
}

ConstantCheck
constant(std::string name, const P& derived, const P& candidate) {
    ConstantCheck c{std::move(name), derived, candidate, false};
    c.matches = derived == candidate;
    return c;
}

Derivation
central_critical() {
    Derivation d;
    d.id = "central-critical";
    d.claim = "d^2/dk^2 h(x; k, k/2) at k = 2 equals lambda_x^2 / 2";
    auto t = PairingTable<P>::generic({kX});
    J h = extended_height(kX, t);
    d.steps.push_back({"h(x) = det[[<q,q>,<q,x>],[<x,q>,<x,x>]] mod J^3", h.str()});
    J hc = h.restrict_central();
    d.steps.push_back({"h(x; k, k/2)", hc.str()});
    d.derived = central_critical_value(h);
    d.expected = half(sym("lambda_x").pow(2));
    d.holds = d.derived == d.expected;

    // with the functional equation imposed the pairing on s = k/2 is skew
    auto tc = impose_functional_equation(t);
    J xx = hw_pairing(kX, kX, tc).restrict_central();
    J skew = (hw_pairing(kX, kTatePeriod, tc) + hw_pairing(kTatePeriod, kX, tc)).restrict_central();
    d.steps.push_back({"<x,x>(k, k/2) after 2w + c = 0", xx.str()});
    d.steps.push_back({"<x,q>(k, k/2) + <q,x>(k, k/2)", skew.str()});
    d.holds = d.holds && xx.is_zero() && skew.is_zero();

    J second = rubin_jet_squared(sym("lambda_x"), h, sym("ord_q"), sym("e"));
    d.steps.push_back({"d^2/dk^2 of -(1/ord_q) e^-1 h / lambda_x on s = k/2",
                       central_critical_value(second).str()});
    return d;
}

Derivation
cyclotomic_line() {
    Derivation d;
    d.id = "cyclotomic-line";
    d.claim = "h(x)|_{k=2} = log_p(q_A) <x,x>^Sch {s-1}^2";
    auto t = PairingTable<P>::generic({kX});
    J h = extended_height(kX, t);
    J hk = h.restrict_weight_two();
    d.steps.push_back({"h(x)|_{k=2}", hk.str()});
    P sch = schneider_height(kX, t);
    d.steps.push_back({"<x,x>^Sch = c - lambda^2 / L", sch.str()});
    d.derived = hk.coefficient(0, 2);
    d.expected = t.log_q() * sch;
    d.holds = d.derived == d.expected && hk.coefficient(1, 1).is_zero() &&
              hk.coefficient(2, 0).is_zero();

    // L_p(A, s) = l2 h|_{k=2} mod (s-1)^3, so its second s-derivative is
    // l3 Lp <x,x>^Sch for the constant l3 checked below.
    P second = split_log_q((hk * sym("l2")).derivative(0, 2));
    P base = sym("Lp") * split_log_q(sch);
    d.steps.push_back({"d^2/ds^2 of l2 h|_{k=2}, with L = Lp ord_q", second.str()});
    d.constants.push_back(constant("l3 = 2 l2 ord_q", second, sym("l2") * sym("ord_q") * base * P(2L)));
    d.constants.push_back(
        constant("l3 = 2 l2 / ord_q", second, sym("l2") * sym("ord_q").inverse() * base * P(2L)));
    return d;
}

Derivation
weight_line() {
    Derivation d;
    d.id = "weight-line";
    d.claim = "d^2/dk^2 h(x; k, 1) at k = 2 equals -log_p(q_A) w_x_x";
    auto t = PairingTable<P>::generic({kX});
    J h = extended_height(kX, t);
    J hs = h.restrict_s_one();
    d.steps.push_back({"h(x; k, 1)", hs.str()});
    d.derived = hs.derivative(2, 0);
    d.expected = -(t.log_q() * t.wt(kX, kX));
    d.holds = d.derived == d.expected;

    // improved factorisation: L_p(k, 1) = l2 h(x; k, 1) divided by the
    // linear term -Lp/2 (k-2) of 1 - a_p(k)^-1
    J lstar = improved_factor(hs * sym("l2"), sym("Lp"));
    P slope = split_log_q(lstar.coefficient(1, 0));
    d.steps.push_back({"d/dk L* at k = 2, with L = Lp ord_q", slope.str()});
    P l4 = sym("l2") * sym("ord_q");
    P w = sym("w_x_x");
    d.constants.push_back(constant("slope = l4 w", slope, l4 * w));
    d.constants.push_back(constant("slope = 2 l4 w", slope, l4 * w * P(2L)));
    P slope_c = slope.substitute("w_x_x", half(-sym("c_x_x")));
    d.steps.push_back({"same slope after 2w + c = 0", slope_c.str()});
    d.constants.push_back(constant("slope = -l4 c / 2", slope_c, -half(l4 * sym("c_x_x"))));
    d.constants.push_back(constant("slope = -l4 c", slope_c, -(l4 * sym("c_x_x"))));
    return d;
}

Derivation
wt_cyc() {
    Derivation d;
    d.id = "wt-cyc";
    d.claim = "<y,x>(k,s) = -<x,y>(k,k-s) forces 2 w_x_x + c_x_x = 0";
    auto t = PairingTable<P>::generic({kX});
    auto report = functional_equation_constraint(t);
    P diagonal;
    bool others_vanish = true;
    for (const auto& r : report.relations) {
        d.steps.push_back({"(" + r.x + ", " + r.y + ") coefficient of " + r.monomial, r.value.str()});
        if (r.x == kX && r.y == kX && r.monomial == "k-2") {
            diagonal = r.value;
        } else {
            others_vanish = others_vanish && r.holds;
        }
    }
    d.derived = diagonal;
    d.expected = sym("w_x_x") * P(2L) + sym("c_x_x");
    d.holds = others_vanish && d.derived == d.expected;
    return d;
}

Derivation
gs_constant() {
    Derivation d;
    d.id = "gs-constant";
    d.claim = "the (s-1) coefficient on k = 2 is Lp L(A,1)/Omega^+";
    J j = rubin_jet(sym("exp_star"), sym("ord_q"), sym("e"), sym("L"));
    d.steps.push_back({"(1/ord_q) e^-1 exp_star <q,q> mod J^2", j.str()});
    J jk = j.restrict_weight_two();
    d.steps.push_back({"restricted to k = 2", jk.str()});
    P coeff = jk.coefficient(0, 1);
    P reciprocity = coeff.substitute("exp_star", sym("e") * sym("R"));
    d.steps.push_back({"with exp_star = e R", reciprocity.str()});
    d.derived = split_log_q(reciprocity);
    d.expected = sym("Lp") * sym("R");
    d.holds = d.derived == d.expected;
    return d;
}

}  // namespace

const std::vector<std::string>&
derivation_ids() {
    static const std::vector<std::string> ids{"central-critical", "cyclotomic-line", "weight-line",
                                              "wt-cyc", "gs-constant"};
    return ids;
}

Derivation
derive(const std::string& id) {
    if (id == "central-critical") {
        return central_critical();
    }
    if (id == "cyclotomic-line") {
        return cyclotomic_line();
    }
    if (id == "weight-line") {
        return weight_line();
    }
    if (id == "wt-cyc") {
        return wt_cyc();
    }
    if (id == "gs-constant") {
        return gs_constant();
    }
    throw LookupError("unknown derivation " + id);
}

std::vector<Derivation>
derive_all() {
    std::vector<Derivation> out;
    for (const auto& id : derivation_ids()) {
        out.push_back(derive(id));
    }
    return out;
}

}  // namespace excezero::jets
