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

#pragma once

#include <map>
#include <vector>

#include "excezero/mtt/real.hpp"
#include "excezero/tate/curve.hpp"

namespace excezero::mtt {

// Level data of a semistable curve. For q | N the Atkin-Lehner eigenvalue is
// w_q = -a_q and the global root number is -prod w_q.
struct LevelData {
    long conductor = 0;
    long tame_level = 0;  // conductor / p
    std::map<long, int> atkin_lehner;
    int root_number = 0;
};

LevelData
level_data(const tate::CurveData& e);

// Real roots of 4x^3 + b2 x^2 + 2 b4 x + b6, in decreasing order.
std::vector<Real>
two_torsion_abscissae(const tate::CurveData& e);

Real
agm(Real a, Real b);

// Least positive real period times the number of real components.
Real
real_period(const tate::CurveData& e);

// L(E,1) from the rapidly converging series (1 + eps) sum a_n/n exp(-2 pi n/sqrt(N)).
Real
l_value_at_one(const tate::CurveData& e, const LevelData& level, const std::vector<long>& an);

// Number of terms needed for exp(-2 pi n t) to drop below 10^-digits.
long
truncation_bound(const Real& t, int digits);

}  // namespace excezero::mtt
