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

namespace excezero::padic {

// p^k for k >= 0. The reference stays valid for the lifetime of the calling thread.
const mpz_class&
prime_power(long p, int k);

// Largest e with p^e | n; n must be nonzero.
int
valuation(const mpz_class& n, long p);

// Largest e with p^e | n!.
long
factorial_valuation(long n, long p);

bool
is_prime(long n);

}  // namespace excezero::padic
