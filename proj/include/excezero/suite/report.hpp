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

namespace excezero::suite {

enum class Verdict { pass, fail, error };

const char*
to_string(Verdict v);

// One verified identity. anchor names the formula being checked. digits is
// the p-adic agreement for numeric checks and -1 for exact ones.
struct CheckRecord {
    std::string check;
    std::string subject;  // curve label, prime or derivation id
    std::string anchor;
    std::string left;
    std::string right;
    int digits = -1;
    int threshold = -1;
    Verdict verdict = Verdict::fail;
    std::string detail;
    double seconds = 0;
};

struct VerificationReport {
    std::vector<CheckRecord> records;

    bool
    passed() const;

    int
    failures() const;

    // Plain text. Runtimes appear only when timings is set, so reports from
    // identical configurations are byte-identical.
    std::string
    render(bool timings = false) const;

    std::string
    to_json(bool timings = false) const;
};

}  // namespace excezero::suite
