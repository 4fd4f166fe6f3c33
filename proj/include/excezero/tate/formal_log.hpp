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

#include <vector>

#include "excezero/padic/padic_number.hpp"
#include "excezero/tate/curve.hpp"

namespace excezero::tate {

using padic::PadicNumber;

struct RationalPoint {
    mpq_class x, y;
    bool infinity = false;
};

// An affine point of the given model over Q_p, or the point at infinity.
struct PadicPoint {
    PadicNumber x, y;
    bool infinity = false;
};

bool
on_curve(const CurveData& e, const RationalPoint& pt);

RationalPoint
add_points(const CurveData& e, const RationalPoint& a, const RationalPoint& b);

// Chord-and-tangent addition on the affine model over Q_p.
PadicPoint
add_points(const CurveData& e, const PadicPoint& a, const PadicPoint& b);

// Order of a rational torsion point (<= 12), or 0 when the point has infinite order.
int
torsion_order(const CurveData& e, const RationalPoint& pt);

// A point with the given x-coordinate, lifted by Hensel's lemma; fails when
// the right-hand side is not a square in Q_p.
PadicPoint
lift_x(const CurveData& e, const PadicNumber& x);

// Coefficients w_0, w_1, ... of the invariant differential omega = (sum w_j t^j) dt
// of the short model y^2 = x^3 + A x + B with A = -c4/48, B = -c6/864, which
// shares omega = dx / (2y + a1 x + a3) with the given model.
std::vector<PadicNumber>
invariant_differential(const CurveData& e, long p, int terms, int precision);

// The formal logarithm: log_E(P) = log_hat(t(M P)) / M with M = (p - 1) ord_p(Delta),
// which pushes P into the kernel of reduction for split multiplicative p.
PadicNumber
formal_log(const CurveData& e, long p, const PadicPoint& pt, int precision);

// Rational points of finite order give the exact zero.
PadicNumber
formal_log(const CurveData& e, long p, const RationalPoint& pt, int precision);

}  // namespace excezero::tate
