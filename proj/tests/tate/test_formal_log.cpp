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
#include "excezero/padic/padic_functions.hpp"
#include "excezero/tate/formal_log.hpp"
#include "oracles/curves.hpp"
#include "oracles/padic_oracles.hpp"

using namespace excezero::tate;
using excezero::padic::PadicNumber;
using excezero::padic::Verdict;
namespace pd = excezero::padic;

TEST_CASE("invariant differential of a short model") {
    // y^2 = x^3 + A x + B: omega = 1 + 2A t^4 + 3B t^6 + 6A^2 t^8 + ...
    auto e = oracle::curve("short", {0, 0, 0, 3, 5}, 7);
    auto w = invariant_differential(e, 7, 10, 12);
    CHECK(pd::compare(w[1], PadicNumber::zero(7, 12)) != Verdict::distinct);
    CHECK(pd::compare(w[4], PadicNumber::from_integer(7, 6, 12)) == Verdict::equal);
    CHECK(pd::compare(w[6], PadicNumber::from_integer(7, 15, 12)) == Verdict::equal);
    CHECK(pd::compare(w[8], PadicNumber::from_integer(7, 54, 12)) == Verdict::equal);
}

TEST_CASE("torsion points have exact zero logarithm") {
    auto e = oracle::c11a1();
    for (auto [x, y] : std::vector<std::pair<long, long>>{{5, 5}, {5, -6}, {16, 60}, {16, -61}}) {
        RationalPoint pt{x, y};
        CHECK(on_curve(e, pt));
        CHECK(torsion_order(e, pt) == 5);
        CHECK(formal_log(e, 11, pt, 10).is_exact_zero());
    }
    CHECK_THROWS_AS(formal_log(e, 11, RationalPoint{1, 1}, 10), excezero::DomainError);
}

TEST_CASE("formal log is a homomorphism") {
    std::mt19937_64 rng(8);
    for (auto e : {oracle::c11a1(), oracle::c15a1(), oracle::c14a1()}) {
        long p = e.p();
        std::vector<PadicPoint> pts;
        for (long x = 1; pts.size() < 4 && x < 200; ++x) {
            try {
                pts.push_back(lift_x(e, PadicNumber::from_integer(p, x, 14)));
            } catch (const excezero::DomainError&) {
            }
        }
        REQUIRE(pts.size() == 4);
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            auto sum = add_points(e, pts[i], pts[i + 1]);
            auto l1 = formal_log(e, p, pts[i], 8);
            auto l2 = formal_log(e, p, pts[i + 1], 8);
            auto l12 = formal_log(e, p, sum, 8);
            CAPTURE(e.label());
            CHECK(pd::agreement(l12, l1 + l2) >= 7);
            auto twice = add_points(e, pts[i], pts[i]);
            CHECK(pd::agreement(formal_log(e, p, twice, 8), l1 + l1) >= 7);
        }
    }
}
