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

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <optional>
#include <string>

namespace excezero::mtt {

// 80 significant decimal digits; the working digit budget of a run is
// capped below this.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<80, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

inline constexpr int kRealDigits = 80;

Real
real_pi();

struct Cx {
    Real re = 0;
    Real im = 0;
};

Cx operator+(const Cx& a, const Cx& b);
Cx operator-(const Cx& a, const Cx& b);
Cx operator*(const Cx& a, const Cx& b);
Cx operator*(const Cx& a, const Real& b);
Cx operator/(const Cx& a, const Cx& b);
Cx conj(const Cx& a);
Real abs(const Cx& a);

// exp(2 pi i num / den)
Cx
root_of_unity(long num, long den);

Real
to_real(const mpq_class& q);

// Continued-fraction reconstruction: the first convergent h/k with
// |x - h/k| < tolerance, provided k <= max_denominator.
std::optional<mpq_class>
reconstruct_rational(const Real& x, const Real& tolerance, long max_denominator);

std::string
format_real(const Real& x, int digits = 20);

}  // namespace excezero::mtt
