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

#include <string>
#include <vector>

#include "excezero/jets/laurent_poly.hpp"

namespace excezero::jets {

// Symbols used by the derivations:
//   L        log_p(q_A)             Lp      L-invariant, L = Lp * ord_q
//   lambda_x log_A(res_p x)         ord_q   ord_p(q_A)
//   c_x_x    cyclotomic height      w_x_x   weight part of <x, x>
//   e        1 - 1/p                exp_star, R = L(A,1)/Omega^+, l2
struct DerivationStep {
    std::string label;
    std::string value;
};

// An exact comparison of a derived constant against one normalisation.
struct ConstantCheck {
    std::string name;
    LaurentPoly derived;
    LaurentPoly candidate;
    bool matches = false;
};

struct Derivation {
    std::string id;
    std::string claim;
    std::vector<DerivationStep> steps;
    LaurentPoly derived;
    LaurentPoly expected;
    bool holds = false;
    std::vector<ConstantCheck> constants;
};

// Ids: central-critical, cyclotomic-line, weight-line, wt-cyc, gs-constant.
const std::vector<std::string>&
derivation_ids();

Derivation
derive(const std::string& id);

std::vector<Derivation>
derive_all();

}  // namespace excezero::jets
