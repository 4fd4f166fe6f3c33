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

#include "excezero/suite/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace excezero::suite {

const char*
to_string(Verdict v) {
    switch (v) {
        case Verdict::pass:
            return "PASS";
        case Verdict::fail:
            return "FAIL";
        case Verdict::error:
            return "ERROR";
    }
    return "?";
}

bool
VerificationReport::passed() const {
    return failures() == 0;
}

int
VerificationReport::failures() const {
    int n = 0;
    for (const auto& r : records) {
        n += r.verdict != Verdict::pass;
    }
    return n;
}

std::string
VerificationReport::render(bool timings) const {
    std::ostringstream os;
    for (const auto& r : records) {
        os << to_string(r.verdict) << "  " << r.check << "  " << r.subject << "\n";
        os << "  identity: " << r.anchor << "\n";
        os << "  left:     " << r.left << "\n";
        os << "  right:    " << r.right << "\n";
        if (r.digits >= 0) {
            os << "  digits:   " << r.digits << " (need " << r.threshold << ")\n";
        } else {
            os << "  digits:   exact\n";
        }
        if (!r.detail.empty()) {
            os << "  note:     " << r.detail << "\n";
        }
        if (timings) {
            os << "  time:     " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
        }
    }
    os << records.size() << " checks, " << failures() << " failing\n";
    return os.str();
}

std::string
VerificationReport::to_json(bool timings) const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["subject"] = r.subject;
        j["identity"] = r.anchor;
        j["left"] = r.left;
        j["right"] = r.right;
        j["digits"] = r.digits;
        j["threshold"] = r.threshold;
        j["verdict"] = to_string(r.verdict);
        j["detail"] = r.detail;
        if (timings) {
            j["seconds"] = r.seconds;
        }
        out.push_back(j);
    }
    return out.dump(2) + "\n";
}

}  // namespace excezero::suite
