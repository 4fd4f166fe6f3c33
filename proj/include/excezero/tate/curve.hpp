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

#include <gmpxx.h>

#include <array>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace excezero::tate {

// Memoized a_ell values. Entries are only ever added; lookups take a shared lock.
class FrobeniusCache {
 public:
    bool
    lookup(long ell, long& out) const;

    void
    insert(long ell, long value);

    size_t
    size() const;

 private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<long, long> values_;
};

enum class Reduction { good, split_multiplicative, nonsplit_multiplicative, additive };

const char*
to_string(Reduction r);

// A Weierstrass model [a1, a2, a3, a4, a6] over Z (minimal at the primes of
// interest), the prime p it is studied at and an optional sign (+1/-1, 0 when
// not recorded).
class CurveData {
 public:
    static CurveData
    make(std::string label, const std::array<mpq_class, 5>& a, long p, int sign = 0);

    const std::string&
    label() const {
        return label_;
    }

    const std::array<mpz_class, 5>&
    a() const {
        return a_;
    }

    long
    p() const {
        return p_;
    }

    int
    sign() const {
        return sign_;
    }

    const mpz_class& b2() const { return b2_; }
    const mpz_class& b4() const { return b4_; }
    const mpz_class& b6() const { return b6_; }
    const mpz_class& b8() const { return b8_; }
    const mpz_class& c4() const { return c4_; }
    const mpz_class& c6() const { return c6_; }
    const mpz_class& discriminant() const { return delta_; }

    mpq_class
    j_invariant() const;

    FrobeniusCache&
    frobenius_cache() const {
        return *cache_;
    }

    std::string
    model_string() const;

 private:
    std::string label_;
    std::array<mpz_class, 5> a_;
    long p_ = 0;
    int sign_ = 0;
    mpz_class b2_, b4_, b6_, b8_, c4_, c6_, delta_;
    std::shared_ptr<FrobeniusCache> cache_;
};

// a_ell = ell + 1 - #E(F_ell) for a prime ell; for bad ell this is +1, -1 or 0
// according to split, nonsplit or additive reduction of the model.
long
a_ell(const CurveData& e, long ell);

// a_1, ..., a_nmax (index 0 is unused and zero).
std::vector<long>
an_table(const CurveData& e, long nmax);

Reduction
reduction_type(const CurveData& e, long q);

// Primes dividing the discriminant.
std::vector<long>
bad_primes(const CurveData& e);

// Product of the bad primes; fails unless every bad prime is multiplicative.
long
semistable_conductor(const CurveData& e);

struct SplitCheck {
    bool split = false;
    Reduction reduction = Reduction::good;
    long ap = 0;
    // Legendre symbol (-c6 / p), which must agree with ap at multiplicative primes.
    int legendre_minus_c6 = 0;
    std::string diagnostic;
};

SplitCheck
check_split_multiplicative(const CurveData& e, long p);

// Exact order of p in the discriminant.
int
ord_discriminant(const CurveData& e, long p);

}  // namespace excezero::tate
