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

#include <cstdlib>

#include "excezero/kernels/frobenius.hpp"

namespace excezero::kernels {

Isa
detected_isa() {
    static const Isa isa = [] {
        if (std::getenv("EXCEZERO_FORCE_SCALAR") != nullptr) {
            return Isa::scalar;
        }
#if defined(EXCEZERO_HAVE_AVX2)
        __builtin_cpu_init();
        if (__builtin_cpu_supports("avx2")) {
            return Isa::avx2;
        }
#endif
        return Isa::scalar;
    }();
    return isa;
}

const char*
isa_name(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

CubicSumFn
cubic_character_sum_for(Isa isa) {
#if defined(EXCEZERO_HAVE_AVX2)
    if (isa == Isa::avx2) {
        return &cubic_character_sum_avx2;
    }
#endif
    return &cubic_character_sum_scalar;
}

int64_t
cubic_character_sum(uint32_t ell, const int8_t* chi, uint32_t c3, uint32_t c2, uint32_t c1, uint32_t c0) {
    static const CubicSumFn fn = cubic_character_sum_for(detected_isa());
    return fn(ell, chi, c3, c2, c1, c0);
}

}  // namespace excezero::kernels
