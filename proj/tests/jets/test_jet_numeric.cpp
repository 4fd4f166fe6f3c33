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

#include "excezero/jets/lfunction_jets.hpp"
#include "excezero/mtt/lfunction.hpp"
#include "excezero/mtt/periods.hpp"
#include "excezero/padic/padic_functions.hpp"
#include "mtt/tables.hpp"
#include "oracles/curves.hpp"

using excezero::padic::PadicNumber;
namespace mtt = excezero::mtt;
namespace jets = excezero::jets;

namespace {

// L(E,1)/Omega^+ from the analytic series and the AGM period.
mpq_class
l_ratio(const excezero::tate::CurveData& e) {
    auto lv = mtt::level_data(e);
    mtt::Real l = mtt::l_value_at_one(e, lv, excezero::tate::an_table(e, 2000));
    auto r = mtt::reconstruct_rational(l / mtt::real_period(e), mtt::Real("1e-30"), 1000);
    REQUIRE(r.has_value());
    return *r;
}

}  // namespace

TEST_CASE("first-order jet on k = 2 reproduces the derivative of L_p") {
    for (const auto& e : {oracle::c11a1(), oracle::c15a1(), oracle::c14a1()}) {
        CAPTURE(e.label());
        const long p = e.p();
        const int n = 12;
        auto tate = excezero::tate::tate_period(e, p, n);
        auto s = jets::tate_scalars(tate);
        PadicNumber exp_star = s.euler * PadicNumber::from_rational(p, l_ratio(e), n + 2);
        auto jk = jets::rubin_jet(exp_star, tate).restrict_weight_two();
        PadicNumber slope = jk.coefficient(0, 1);

        mtt::PadicLFunction l(testing_tables::table(e), 3, n);
        auto gs = mtt::greenberg_stevens_check(l, tate);
        CHECK(excezero::padic::agreement(slope, gs.predicted) >= n - 2);
        CHECK(excezero::padic::relative_agreement(slope, l.derivative_at_1()) >= 2);
    }
}

TEST_CASE("Mellin image of the Iwasawa series matches the moments") {
    const auto e = oracle::c15a1();
    const long p = e.p();
    mtt::PadicLFunction l(testing_tables::table(e), 3, 12);
    auto g = l.iwasawa_coefficients(4);
    std::vector<std::vector<PadicNumber>> coeffs{g};
    PadicNumber log_gamma = excezero::padic::padic_log(PadicNumber::from_integer(p, 1 + p, 14));
    auto j = jets::mellin_jet(coeffs, log_gamma, log_gamma);
    const int tag = l.derivative_error_tag();
    REQUIRE(tag >= 2);
    mpz_class fact = 1;
    for (int k = 0; k <= 3; ++k) {
        if (k > 0) {
            fact *= k;
        }
        CAPTURE(k);
        PadicNumber expected = l.moment(k) / PadicNumber::from_integer(p, fact, 14);
        CHECK(excezero::padic::agreement(j.coefficient(0, k), expected) >= tag - 1);
        CHECK(j.coefficient(1, k).is_zero());
    }
    // the exceptional zero survives the change of variable
    CHECK(j.coefficient(0, 0).is_zero());
}
