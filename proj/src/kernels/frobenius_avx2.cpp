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

#include <immintrin.h>

#include "excezero/kernels/frobenius.hpp"

namespace excezero::kernels {

namespace {

inline uint32_t
cubic_at(uint64_t ell, uint64_t c3, uint64_t c2, uint64_t c1, uint64_t c0, uint64_t x) {
    x %= ell;
    uint64_t v = (c3 * x + c2) % ell;
    v = (v * x + c1) % ell;
    return static_cast<uint32_t>((v * x + c0) % ell);
}

inline __m256i
add_mod(__m256i a, __m256i b, __m256i ell) {
    __m256i s = _mm256_add_epi32(a, b);
    return _mm256_min_epu32(s, _mm256_sub_epi32(s, ell));
}

}  // namespace

// Lane j walks x = j, j + 8, j + 16, ... carrying the forward differences of
// the cubic with step 8, so each step is three modular additions and a gather.
int64_t
cubic_character_sum_avx2(uint32_t ell, const int8_t* chi, uint32_t c3, uint32_t c2, uint32_t c1, uint32_t c0) {
    const uint32_t blocks = ell / 8;
    alignas(32) uint32_t f[8], d1[8], d2[8], d3[8];
    for (uint32_t j = 0; j < 8; ++j) {
        uint32_t v0 = cubic_at(ell, c3, c2, c1, c0, j);
        uint32_t v1 = cubic_at(ell, c3, c2, c1, c0, j + 8);
        uint32_t v2 = cubic_at(ell, c3, c2, c1, c0, j + 16);
        uint32_t v3 = cubic_at(ell, c3, c2, c1, c0, j + 24);
        auto sub = [ell](uint32_t a, uint32_t b) { return a >= b ? a - b : a + ell - b; };
        uint32_t a1 = sub(v1, v0), a2 = sub(v2, v1), a3 = sub(v3, v2);
        uint32_t b1 = sub(a2, a1), b2 = sub(a3, a2);
        f[j] = v0;
        d1[j] = a1;
        d2[j] = b1;
        d3[j] = sub(b2, b1);
    }
    __m256i vf = _mm256_load_si256(reinterpret_cast<const __m256i*>(f));
    __m256i vd1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d1));
    __m256i vd2 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d2));
    const __m256i vd3 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d3));
    const __m256i vell = _mm256_set1_epi32(static_cast<int>(ell));
    __m256i acc = _mm256_setzero_si256();
    const int* base = reinterpret_cast<const int*>(chi);
    for (uint32_t b = 0; b < blocks; ++b) {
        __m256i g = _mm256_i32gather_epi32(base, vf, 1);
        g = _mm256_srai_epi32(_mm256_slli_epi32(g, 24), 24);
        acc = _mm256_add_epi32(acc, g);
        vf = add_mod(vf, vd1, vell);
        vd1 = add_mod(vd1, vd2, vell);
        vd2 = add_mod(vd2, vd3, vell);
    }
    alignas(32) int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    int64_t sum = 0;
    for (int j = 0; j < 8; ++j) {
        sum += lanes[j];
    }
    for (uint64_t x = static_cast<uint64_t>(blocks) * 8; x < ell; ++x) {
        sum += chi[cubic_at(ell, c3, c2, c1, c0, x)];
    }
    return sum;
}

}  // namespace excezero::kernels
