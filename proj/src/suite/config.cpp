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

#include "excezero/suite/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "excezero/errors.hpp"

namespace excezero::suite {

void
RunConfig::validate() const {
    if (precision < 1 || max_level < 1 || complex_digits < 1 || coleman_precision < 1 ||
        coleman_levels < 0 || jet_order < 2 || interp_max_prime < 0 || threads < 0) {
        throw ValidationError("configuration caps must be positive");
    }
    if (max_level > 4) {
        throw ValidationError("max_level is capped at 4");
    }
    if (complex_digits < 20 || complex_digits > 72) {
        throw ValidationError("complex_digits must lie in [20, 72]");
    }
}

RunConfig
RunConfig::from_json_text(const std::string& text, RunConfig base) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("config: expected a JSON object");
    }
    RunConfig c = base;
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "precision") {
                c.precision = v.get<int>();
            } else if (key == "max_level") {
                c.max_level = v.get<int>();
            } else if (key == "complex_digits") {
                c.complex_digits = v.get<int>();
            } else if (key == "coleman_precision") {
                c.coleman_precision = v.get<int>();
            } else if (key == "coleman_levels") {
                c.coleman_levels = v.get<int>();
            } else if (key == "jet_order") {
                c.jet_order = v.get<int>();
            } else if (key == "interp_max_prime") {
                c.interp_max_prime = v.get<long>();
            } else if (key == "threads") {
                c.threads = v.get<int>();
            } else if (key == "dataset_path") {
                c.dataset_path = v.get<std::string>();
            } else if (key == "report_path") {
                c.report_path = v.get<std::string>();
            } else if (key == "timings") {
                c.timings = v.get<bool>();
            } else {
                throw ParseError("config: unknown key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

RunConfig
RunConfig::from_json_text(const std::string& text) {
    return from_json_text(text, RunConfig{});
}

RunConfig
RunConfig::from_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw ParseError(path + ": cannot open config");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return from_json_text(buf.str());
}

}  // namespace excezero::suite
