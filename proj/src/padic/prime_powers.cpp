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

#include "excezero/padic/prime_powers.hpp"

#include <deque>
#include <unordered_map>

#include "excezero/errors.hpp"

namespace excezero::padic {

const mpz_class&
prime_power(long p, int k) {
    if (k < 0) {
        throw DomainError("prime_power: negative exponent");
    }
    thread_local std::unordered_map<long, std::deque<mpz_class>> cache;
    auto& powers = cache[p];
    if (powers.empty()) {
        powers.emplace_back(1);
    }
    while (static_cast<int>(powers.size()) <= k) {
        powers.emplace_back(powers.back() * p);
    }
    return powers[k];
}

int
valuation(const mpz_class& n, long p) {
    if (n == 0) {
        throw DomainError("valuation of zero");
    }
    mpz_class rest;
    mpz_class prime(p);
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long
factorial_valuation(long n, long p) {
    long e = 0;
    for (long q = n / p; q > 0; q /= p) {
        e += q;
    }
    return e;
}

bool
is_prime(long n) {
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace excezero::padic
