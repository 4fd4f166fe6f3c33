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

#include "excezero/coleman/power_series.hpp"

namespace excezero::coleman {

// The elements x_n = p + Tr_{K_n / Q_{p,n}} sum_{k=0}^{n} (zeta_{p^(n+1-k)} - 1)/p^k
// for n = 0 .. n_max, each in K_n. They are trace compatible and x_0 = 0.
std::vector<CyclotomicElement>
x_values(long p, int n_max, int precision);

// log_p of a principal unit of K_n: u is raised to p^r until u^(p^r) - 1 has
// integral coefficients divisible by p, then the series is summed. Costs r
// digits of precision.
CyclotomicElement
cyclotomic_log(const CyclotomicElement& u);

// Two independent evaluations of the coefficients of log g: a closed form
// that sums the geometric series in p^k exactly, and a direct sum over the
// Teichmuller conjugates truncated in k.
enum class SeriesRoute { closed_form, conjugate_sum };

const char*
to_string(SeriesRoute r);

// Degree D for which g(zeta_{p^(n+1)} - 1) is determined to p^N.
int
default_degree(long p, int precision, int level);

// The principal unit g in 1 + (p, X) Z_p[[X]] with log_p g(0) = p and
// log_p g(zeta_{p^(n+1)} - 1) = x_n, built as exp(H) where H is the unique
// series with H(0) = p and H(zeta_{p^(n+1)} - 1) = x_n. The result is exact
// modulo (p^N, X^D); ConstructionError if guard digits run out.
PowerSeriesZp
construct_g(long p, int degree, int precision, SeriesRoute route = SeriesRoute::closed_form);

// The coefficients M_i = i [X^i] H for i < degree, to the given precision.
std::vector<PadicNumber>
log_g_scaled_coefficients(long p, int degree, int precision, SeriesRoute route);

// C_n = g(zeta_{p^(n+1)} - 1) for n = 0 .. n_max.
struct NormCompatibleUnits {
    enum class Provenance { evaluated_from_series, direct };

    long p = 0;
    std::vector<CyclotomicElement> units;
    Provenance provenance = Provenance::evaluated_from_series;

    // ord_p(N_{m,n}(C_m) - C_n) over the coefficients.
    int
    norm_agreement(int m, int n) const;
};

NormCompatibleUnits
evaluate_units(const PowerSeriesZp& g, int n_max);

// ord(c') from log_p g(0) = (p - 1) ord(c') log_p(1 + p), with sigma_0 the
// generator acting through 1 + p; cross-checked against 1/l with
// l = log_p(1 + p)(1 - 1/p).
struct OrdCPrime {
    PadicNumber ord;
    PadicNumber l_varsigma;
    PadicNumber product;  // ord * l_varsigma, expected 1
    int digits = 0;       // ord_p(product - 1)
};

OrdCPrime
ord_c_prime(const PowerSeriesZp& g);

// Every defining property of g checked at precision N.
struct ColemanReport {
    long p = 0;
    int precision = 0;
    int degree = 0;
    int log_g0_digits = 0;
    std::vector<int> log_cn_digits;  // log C_n against x_n
    int c0_digits = 0;               // C_0 against 1
    int norm_digits = 0;             // N_{1,0}(C_1) against C_0
    int trace_digits = 0;            // Tr_{1,0}(x_1) against x_0
    int ord_digits = 0;              // ord(c') l_varsigma against 1
    int uniqueness_digits = 0;       // the two series routes against each other
    int norm_invariance_digits = 0;  // N(g) against g in low degree
    PowerSeriesZp g;
    OrdCPrime ord;

    bool
    passed() const;
};

ColemanReport
verify_coleman(long p, int precision, int n_max = 1);

}  // namespace excezero::coleman
