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

namespace excezero::suite {

struct RunConfig {
    // p-adic digits carried by L-function values, Tate periods and jets
    int precision = 12;
    // deepest Riemann-sum level; the cost grows like p^level
    int max_level = 3;
    // decimal digits for the complex modular-symbol sums
    int complex_digits = 60;
    // Coleman series: digits and the top cyclotomic level checked
    int coleman_precision = 8;
    int coleman_levels = 1;
    int jet_order = 3;
    // interpolation is run for curves with p at most this bound
    long interp_max_prime = 7;
    // worker threads across curves; 0 picks the hardware count
    int threads = 0;
    std::string dataset_path;
    std::string report_path;
    bool timings = false;

    // Throws ValidationError unless every cap is positive and max_level <= 4.
    void
    validate() const;

    // Reads a JSON object whose keys are the field names above; unknown keys
    // are rejected.
    static RunConfig
    from_json_file(const std::string& path);

    static RunConfig
    from_json_text(const std::string& text);

    // Overrides only the keys present in text.
    static RunConfig
    from_json_text(const std::string& text, RunConfig base);
};

}  // namespace excezero::suite
