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

#include "excezero/kernels/frobenius.hpp"

namespace excezero::kernels {

std::vector<int8_t>
quadratic_character_table(uint32_t ell) {
    std::vector<int8_t> chi(ell + 3, 0);
    for (uint32_t x = 1; x < ell; ++x) {
        chi[x] = -1;
    }
    for (uint64_t x = 1; x <= ell / 2; ++x) {
        chi[(x * x) % ell] = 1;
    }
    return chi;
}

int64_t
cubic_character_sum_scalar(uint32_t ell, const int8_t* chi, uint32_t c3, uint32_t c2, uint32_t c1, uint32_t c0) {
    int64_t sum = 0;
    for (uint64_t x = 0; x < ell; ++x) {
        uint64_t v = (c3 * x + c2) % ell;
        v = (v * x + c1) % ell;
        v = (v * x + c0) % ell;
        sum += chi[v];
    }
    return sum;
}

}  // namespace excezero::kernels
