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

#include "excezero/jets/laurent_poly.hpp"

#include <sstream>

#include "excezero/errors.hpp"

namespace excezero::jets {

using padic::PadicNumber;

LaurentPoly::LaurentPoly(const mpq_class& c) {
    add_term({}, c);
}

LaurentPoly::LaurentPoly(long c) {
    add_term({}, mpq_class(c));
}

LaurentPoly
LaurentPoly::symbol(const std::string& name, int exponent) {
    if (name.empty()) {
        throw ValidationError("symbol names must be nonempty");
    }
    LaurentPoly r;
    Monomial m;
    if (exponent != 0) {
        m[name] = exponent;
    }
    r.add_term(m, 1);
    return r;
}

void
LaurentPoly::add_term(const Monomial& m, const mpq_class& value) {
    // equality of terms relies on canonical fractions
    mpq_class c = value;
    c.canonicalize();
    if (c == 0) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

bool
LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool
LaurentPoly::is_monomial() const {
    return terms_.size() == 1;
}

mpq_class
LaurentPoly::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::set<std::string>
LaurentPoly::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [name, e] : m) {
            out.insert(name);
        }
    }
    return out;
}

LaurentPoly
LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPoly&
LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

LaurentPoly&
LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

LaurentPoly&
LaurentPoly::operator*=(const LaurentPoly& other) {
    LaurentPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m = ma;
            for (const auto& [name, e] : mb) {
                int& slot = m[name];
                slot += e;
                if (slot == 0) {
                    m.erase(name);
                }
            }
            r.add_term(m, ca * cb);
        }
    }
    *this = std::move(r);
    return *this;
}

LaurentPoly
LaurentPoly::inverse() const {
    if (!is_monomial()) {
        throw DomainError("only monomials are invertible: " + str());
    }
    const auto& [m, c] = *terms_.begin();
    Monomial inv;
    for (const auto& [name, e] : m) {
        inv[name] = -e;
    }
    LaurentPoly r;
    r.add_term(inv, 1 / c);
    return r;
}

LaurentPoly
LaurentPoly::pow(int e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    LaurentPoly r(1L);
    for (int i = 0; i < e; ++i) {
        r *= *this;
    }
    return r;
}

LaurentPoly
LaurentPoly::substitute(const std::string& name, const LaurentPoly& value) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int e = 0;
        auto it = rest.find(name);
        if (it != rest.end()) {
            e = it->second;
            rest.erase(it);
        }
        LaurentPoly term;
        term.add_term(rest, c);
        r += term * value.pow(e);
    }
    return r;
}

PadicNumber
LaurentPoly::evaluate(const std::map<std::string, PadicNumber>& values, long p,
                      int precision) const {
    PadicNumber sum = PadicNumber::exact_zero(p);
    for (const auto& [m, c] : terms_) {
        PadicNumber t = PadicNumber::from_rational(p, c, precision);
        for (const auto& [name, e] : m) {
            auto it = values.find(name);
            if (it == values.end()) {
                throw LookupError("no value bound for symbol " + name);
            }
            t *= e >= 0 ? it->second.pow(e) : it->second.inverse().pow(-e);
        }
        sum += t;
    }
    return sum;
}

mpq_class
LaurentPoly::evaluate(const std::map<std::string, mpq_class>& values) const {
    mpq_class sum = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (const auto& [name, e] : m) {
            auto it = values.find(name);
            if (it == values.end()) {
                throw LookupError("no value bound for symbol " + name);
            }
            if (it->second == 0 && e < 0) {
                throw DomainError("symbol " + name + " bound to zero under a negative power");
            }
            for (int i = 0; i < std::abs(e); ++i) {
                t = e > 0 ? mpq_class(t * it->second) : mpq_class(t / it->second);
            }
        }
        sum += t;
    }
    return sum;
}

std::string
LaurentPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (a != 1 || m.empty()) {
            os << a.get_str();
            wrote = true;
        }
        for (const auto& [name, e] : m) {
            os << (wrote ? "*" : "") << name;
            if (e != 1) {
                os << "^" << e;
            }
            wrote = true;
        }
    }
    return os.str();
}

LaurentPoly
operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
}

LaurentPoly
operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
}

LaurentPoly
operator*(LaurentPoly a, const LaurentPoly& b) {
    return a *= b;
}

}  // namespace excezero::jets
