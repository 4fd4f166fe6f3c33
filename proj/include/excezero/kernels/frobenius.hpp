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

#include <cstdint>
#include <vector>

namespace excezero::kernels {

// Quadratic character of F_ell as a byte table: 0 at 0, +1 on squares, -1 elsewhere.
// Three bytes of padding follow so 32-bit gathers stay in bounds.
std::vector<int8_t>
quadratic_character_table(uint32_t ell);

// sum_{x in F_ell} chi(c3 x^3 + c2 x^2 + c1 x + c0) for an odd prime ell < 2^30.
// Coefficients must already be reduced modulo ell.
using CubicSumFn = int64_t (*)(uint32_t ell, const int8_t* chi, uint32_t c3, uint32_t c2, uint32_t c1,
                               uint32_t c0);

int64_t
cubic_character_sum_scalar(uint32_t ell, const int8_t* chi, uint32_t c3, uint32_t c2, uint32_t c1, uint32_t c0);

#if defined(EXCEZERO_HAVE_AVX2)
int64_t
cubic_character_sum_avx2(uint32_t ell, const int8_t* chi, uint32_t c3, uint32_t c2, uint32_t c1, uint32_t c0);
#endif

enum class Isa { scalar, avx2 };

// Best variant supported by the running CPU. Setting EXCEZERO_FORCE_SCALAR
// in the environment pins the scalar path.
Isa
detected_isa();

const char*
isa_name(Isa isa);

CubicSumFn
cubic_character_sum_for(Isa isa);

int64_t
cubic_character_sum(uint32_t ell, const int8_t* chi, uint32_t c3, uint32_t c2, uint32_t c1, uint32_t c0);

}  // namespace excezero::kernels
