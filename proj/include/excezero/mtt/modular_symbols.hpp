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

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "excezero/mtt/periods.hpp"
#include "excezero/mtt/real.hpp"
#include "excezero/tate/curve.hpp"

namespace excezero::mtt {

struct SymbolConfig {
    // Working decimal digits of the period sums; reconstruction accepts
    // |x - h/k| < 10^(-digits/2).
    int digits = 60;
    long max_denominator = 100000;
};

struct PrecisionRecord {
    int digits = 0;
    long terms = 0;              // longest truncated q-expansion used
    Real worst_residual = 0;     // largest |x - reconstructed rational|
};

// Plus modular symbols [a/m]^+ = Re(2 pi i int_{i oo}^{a/m} f(z) dz) / Omega^+
// stored exactly for every denominator requested before freezing.
class ModularSymbolTable {
 public:
    const tate::CurveData&
    curve() const {
        return curve_;
    }

    const LevelData&
    level() const {
        return level_;
    }

    const Real&
    omega_plus() const {
        return omega_plus_;
    }

    // Least common multiple of every reconstructed denominator.
    const mpz_class&
    denominator_bound() const {
        return denominator_bound_;
    }

    const PrecisionRecord&
    precision_record() const {
        return record_;
    }

    bool
    has_denominator(long m) const {
        return symbols_.count(m) != 0;
    }

    std::vector<long>
    denominators() const;

    // [a/m]^+ after reducing a/m to lowest terms. LookupError when the
    // reduced denominator was not built.
    mpq_class
    symbol(const mpz_class& a, long m) const;

    mpq_class
    symbol(const mpq_class& r) const;

 private:
    friend class ModularSymbolBuilder;

    ModularSymbolTable(const tate::CurveData& curve) : curve_(curve) {
    }

    tate::CurveData curve_;
    LevelData level_;
    Real omega_plus_;
    mpz_class denominator_bound_ = 1;
    PrecisionRecord record_;
    // m -> [a/m]^+ for a in [0, m); entries with gcd(a, m) > 1 are unused.
    std::map<long, std::vector<mpq_class>> symbols_;
};

// Collects the denominators to tabulate, then evaluates them all in one pass
// over a shared a_n table. freeze() hands out an immutable table.
class ModularSymbolBuilder {
 public:
    explicit ModularSymbolBuilder(const tate::CurveData& e, SymbolConfig config = {});

    ModularSymbolBuilder&
    require(long m);

    // Every p^k with k <= nu.
    ModularSymbolBuilder&
    require_prime_powers(int nu);

    std::shared_ptr<const ModularSymbolTable>
    freeze();

 private:
    tate::CurveData curve_;
    SymbolConfig config_;
    std::set<long> wanted_;
};

// One-off evaluation of a single symbol.
mpq_class
modular_symbol(const tate::CurveData& e, const mpq_class& r, SymbolConfig config = {});

}  // namespace excezero::mtt
