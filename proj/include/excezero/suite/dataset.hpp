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
#include <string_view>
#include <vector>

#include "excezero/tate/curve.hpp"

namespace excezero::suite {

// One record per line:
//   label, [a1,a2,a3,a4,a6], p[, sign]
// Blank lines and text after '#' are ignored. Coefficients may be written
// as rationals but must be integral. Records are rejected (ParseError
// naming the source and line) when malformed, singular, duplicated by
// (label, p), or when p does not divide the discriminant.
std::vector<tate::CurveData>
parse_dataset(std::string_view text, const std::string& source = "<memory>");

std::vector<tate::CurveData>
ingest_dataset(const std::string& path);

// The shipped table of split multiplicative (curve, p) pairs.
std::vector<tate::CurveData>
builtin_dataset();

const std::string&
builtin_dataset_text();

// Curves matching label (empty for all) and p (0 for any).
std::vector<tate::CurveData>
select_curves(const std::vector<tate::CurveData>& all, const std::string& label, long p);

}  // namespace excezero::suite
