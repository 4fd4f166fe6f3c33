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

#include "excezero/suite/config.hpp"
#include "excezero/suite/report.hpp"
#include "excezero/tate/curve.hpp"

namespace excezero::suite {

enum class Check { trivial_zero, gs, interp, funceq, coleman, derivative_model, jets };

const char*
to_string(Check c);

// Accepts the names printed by to_string.
Check
parse_check(const std::string& name);

const std::vector<Check>&
all_checks();

// Runs the selected checks. Curve checks run concurrently across curves,
// Coleman checks once per distinct prime at most coleman_max_prime, jet
// derivations once. Records are ordered by curve (dataset order), then
// prime, then derivation, each in selection order. Curves without split
// multiplicative reduction at their prime are rejected up front with
// ValidationError; failures inside a check are recorded, not thrown.
VerificationReport
run_suite(const RunConfig& config, const std::vector<tate::CurveData>& curves,
          const std::vector<Check>& checks, long coleman_max_prime = 11);

}  // namespace excezero::suite
