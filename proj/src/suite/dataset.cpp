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

#include "excezero/suite/dataset.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "excezero/errors.hpp"

namespace excezero::suite {

namespace {

std::string
trim(std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    auto end = s.find_last_not_of(ws);
    s.erase(end == std::string::npos ? 0 : end + 1);
    return s;
}

[[noreturn]] void
fail(const std::string& source, int line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

mpq_class
parse_rational(const std::string& text, const std::string& source, int line) {
    static const std::regex re(R"(^\s*([+-]?\d+)(/(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        fail(source, line, "malformed rational '" + trim(text) + "'");
    }
    mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
    mpz_class den = m[3].matched ? mpz_class(m[3].str()) : mpz_class(1);
    if (den == 0) {
        fail(source, line, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

std::vector<tate::CurveData>
parse_dataset(std::string_view text, const std::string& source) {
    static const std::regex record(
        R"(^\s*([A-Za-z0-9_.-]+)\s*,?\s*\[([^\]]*)\]\s*,?\s*(\d+)\s*(,?\s*([+-]?1))?\s*$)");
    std::vector<tate::CurveData> out;
    std::set<std::pair<std::string, long>> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string body = trim(raw.substr(0, raw.find('#')));
        if (body.empty()) {
            continue;
        }
        std::smatch m;
        if (!std::regex_match(body, m, record)) {
            fail(source, line, "expected 'label, [a1,a2,a3,a4,a6], p[, sign]'");
        }
        std::string label = m[1].str();
        std::array<mpq_class, 5> a;
        std::istringstream coeffs(m[2].str());
        std::string item;
        int count = 0;
        while (std::getline(coeffs, item, ',')) {
            if (count == 5) {
                fail(source, line, "more than five coefficients");
            }
            a[count++] = parse_rational(item, source, line);
        }
        if (count != 5) {
            fail(source, line, "expected five coefficients");
        }
        long p = std::stol(m[3].str());
        int sign = m[5].matched ? std::stoi(m[5].str()) : 0;
        if (!seen.insert({label, p}).second) {
            fail(source, line, "duplicate record for " + label + " at p = " + std::to_string(p));
        }
        tate::CurveData e;
        try {
            e = tate::CurveData::make(label, a, p, sign);
        } catch (const std::exception& ex) {
            fail(source, line, ex.what());
        }
        if (mpz_divisible_ui_p(e.discriminant().get_mpz_t(), p) == 0) {
            fail(source, line, label + ": p = " + std::to_string(p) + " does not divide the conductor");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<tate::CurveData>
ingest_dataset(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw ParseError(path + ": cannot open dataset");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_dataset(buf.str(), path);
}

const std::string&
builtin_dataset_text() {
    static const std::string text =
        "11a1, [0,-1,1,-10,-20], 11, +1\n"
        "11a2, [0,-1,1,-7820,-263580], 11, +1\n"
        "11a3, [0,-1,1,0,0], 11, +1\n"
        "14a1, [1,0,1,4,-6], 7, +1\n"
        "15a1, [1,1,1,-10,-10], 5, +1\n"
        "17a1, [1,-1,1,-1,-14], 17, +1\n";
    return text;
}

std::vector<tate::CurveData>
builtin_dataset() {
    return parse_dataset(builtin_dataset_text(), "<builtin>");
}

std::vector<tate::CurveData>
select_curves(const std::vector<tate::CurveData>& all, const std::string& label, long p) {
    std::vector<tate::CurveData> out;
    for (const auto& e : all) {
        if ((label.empty() || e.label() == label) && (p == 0 || e.p() == p)) {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace excezero::suite
