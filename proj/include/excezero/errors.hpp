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

#include <stdexcept>
#include <string>

namespace excezero {

// Input outside the domain of a function (log of zero, exp off its disc, ...).
class DomainError : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

// Requested precision cannot be delivered from the inputs.
class PrecisionError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

class LookupError : public std::out_of_range {
 public:
    using std::out_of_range::out_of_range;
};

class ConstructionError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {
    }

    int
    line() const {
        return line_;
    }

 private:
    int line_;
};

}  // namespace excezero
