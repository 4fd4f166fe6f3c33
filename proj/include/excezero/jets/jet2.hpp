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

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "excezero/errors.hpp"
#include "excezero/jets/scalar.hpp"

namespace excezero::jets {

inline constexpr int kDefaultJetOrder = 3;

// A function of (k, s) near (2, 1) known modulo total degree > order in
// u = k - 2 and v = s - 1. Coefficient (i, j) multiplies u^i v^j. Absent
// coefficients are zero.
template <class S>
class Jet2 {
 public:
    using Traits = ScalarTraits<S>;

    explicit Jet2(int order = kDefaultJetOrder) : order_(order) {
        if (order < 0) {
            throw ValidationError("jet order must be nonnegative");
        }
    }

    static Jet2
    monomial(int i, int j, const S& c, int order = kDefaultJetOrder) {
        Jet2 r(order);
        r.set(i, j, c);
        return r;
    }

    int
    order() const {
        return order_;
    }

    S
    coefficient(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? S() : it->second;
    }

    const std::map<std::pair<int, int>, S>&
    coefficients() const {
        return c_;
    }

    void
    set(int i, int j, const S& c) {
        if (i < 0 || j < 0) {
            throw ValidationError("jet exponents must be nonnegative");
        }
        if (i + j > order_) {
            return;
        }
        c_[{i, j}] = c;
        if (Traits::is_zero(c)) {
            c_.erase({i, j});
        }
    }

    bool
    is_zero() const {
        return c_.empty();
    }

    // Lowest total degree carrying a nonzero coefficient; order + 1 for zero.
    int
    valuation() const {
        int v = order_ + 1;
        for (const auto& [ij, c] : c_) {
            v = std::min(v, ij.first + ij.second);
        }
        return v;
    }

    // True when s - 1 does not occur.
    bool
    depends_only_on_k() const {
        for (const auto& [ij, c] : c_) {
            if (ij.second != 0) {
                return false;
            }
        }
        return true;
    }

    Jet2
    truncated(int order) const {
        Jet2 r(std::min(order, order_));
        for (const auto& [ij, c] : c_) {
            r.set(ij.first, ij.second, c);
        }
        return r;
    }

    // The component of total degree a: the class in J^a / J^(a+1).
    Jet2
    homogeneous(int a) const {
        Jet2 r(order_);
        for (const auto& [ij, c] : c_) {
            if (ij.first + ij.second == a) {
                r.set(ij.first, ij.second, c);
            }
        }
        return r;
    }

    Jet2&
    operator+=(const Jet2& o) {
        order_ = std::min(order_, o.order_);
        prune();
        for (const auto& [ij, c] : o.c_) {
            if (ij.first + ij.second <= order_) {
                set(ij.first, ij.second, coefficient(ij.first, ij.second) + c);
            }
        }
        return *this;
    }

    Jet2&
    operator-=(const Jet2& o) {
        return *this += -o;
    }

    Jet2
    operator-() const {
        Jet2 r(order_);
        for (const auto& [ij, c] : c_) {
            r.set(ij.first, ij.second, S() - c);
        }
        return r;
    }

    Jet2&
    operator*=(const Jet2& o) {
        Jet2 r(std::min(order_, o.order_));
        std::map<std::pair<int, int>, S> acc;
        for (const auto& [a, ca] : c_) {
            for (const auto& [b, cb] : o.c_) {
                int i = a.first + b.first;
                int j = a.second + b.second;
                if (i + j <= r.order_) {
                    acc[{i, j}] += ca * cb;
                }
            }
        }
        for (const auto& [ij, c] : acc) {
            r.set(ij.first, ij.second, c);
        }
        *this = std::move(r);
        return *this;
    }

    Jet2&
    operator*=(const S& s) {
        Jet2 r(order_);
        for (const auto& [ij, c] : c_) {
            r.set(ij.first, ij.second, c * s);
        }
        *this = std::move(r);
        return *this;
    }

    Jet2
    scaled(const mpq_class& q) const {
        Jet2 r(order_);
        for (const auto& [ij, c] : c_) {
            r.set(ij.first, ij.second, Traits::scale(c, q));
        }
        return r;
    }

    // u -> a u + b v, v -> c u + d v. Homogeneous, so the order is kept and
    // the map is a ring homomorphism of the truncated ring.
    Jet2
    substitute_linear(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                      const mpq_class& d) const {
        Jet2 r(order_);
        std::map<std::pair<int, int>, S> acc;
        for (const auto& [ij, coeff] : c_) {
            const int i = ij.first;
            const int j = ij.second;
            // (a u + b v)^i (c u + d v)^j
            for (int x = 0; x <= i; ++x) {
                mpq_class left = binomial(i, x) * power(a, i - x) * power(b, x);
                if (left == 0) {
                    continue;
                }
                for (int y = 0; y <= j; ++y) {
                    mpq_class right = binomial(j, y) * power(c, j - y) * power(d, y);
                    if (right == 0) {
                        continue;
                    }
                    acc[{i - x + j - y, x + y}] += Traits::scale(coeff, left * right);
                }
            }
        }
        for (const auto& [ij, v] : acc) {
            r.set(ij.first, ij.second, v);
        }
        return r;
    }

    // s = k/2
    Jet2
    restrict_central() const {
        return substitute_linear(1, 0, mpq_class(1, 2), 0);
    }

    // k = 2
    Jet2
    restrict_weight_two() const {
        return substitute_linear(0, 0, 0, 1);
    }

    // s = 1
    Jet2
    restrict_s_one() const {
        return substitute_linear(1, 0, 0, 0);
    }

    // s -> k - s
    Jet2
    reflect() const {
        return substitute_linear(1, 0, 1, -1);
    }

    Jet2
    d_dk() const {
        Jet2 r(order_ == 0 ? 0 : order_ - 1);
        for (const auto& [ij, c] : c_) {
            if (ij.first > 0) {
                r.set(ij.first - 1, ij.second, Traits::scale(c, ij.first));
            }
        }
        return r;
    }

    Jet2
    d_ds() const {
        Jet2 r(order_ == 0 ? 0 : order_ - 1);
        for (const auto& [ij, c] : c_) {
            if (ij.second > 0) {
                r.set(ij.first, ij.second - 1, Traits::scale(c, ij.second));
            }
        }
        return r;
    }

    // d^i/dk^i d^j/ds^j at (2, 1) = i! j! times the coefficient.
    S
    derivative(int i, int j) const {
        if (i + j > order_) {
            throw PrecisionError("derivative beyond the jet order");
        }
        mpq_class f = factorial(i) * factorial(j);
        return Traits::scale(coefficient(i, j), f);
    }

    // Coefficientwise equality up to the smaller order.
    bool
    equals(const Jet2& o) const {
        const int n = std::min(order_, o.order_);
        return (truncated(n) - o.truncated(n)).is_zero();
    }

    std::string
    str() const {
        if (c_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (int deg = 0; deg <= order_; ++deg) {
            for (int i = deg; i >= 0; --i) {
                auto it = c_.find({i, deg - i});
                if (it == c_.end()) {
                    continue;
                }
                os << (first ? "" : " + ") << "(" << Traits::str(it->second) << ")";
                if (i > 0) {
                    os << "*(k-2)" << (i > 1 ? "^" + std::to_string(i) : "");
                }
                if (deg - i > 0) {
                    os << "*(s-1)" << (deg - i > 1 ? "^" + std::to_string(deg - i) : "");
                }
                first = false;
            }
        }
        return os.str();
    }

 private:
    static mpq_class
    power(const mpq_class& x, int e) {
        mpq_class r = 1;
        for (int t = 0; t < e; ++t) {
            r *= x;
        }
        return r;
    }

    static mpq_class
    binomial(int n, int k) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), n, k);
        return mpq_class(r);
    }

    static mpq_class
    factorial(int n) {
        mpz_class r;
        mpz_fac_ui(r.get_mpz_t(), n);
        return mpq_class(r);
    }

    void
    prune() {
        for (auto it = c_.begin(); it != c_.end();) {
            it = it->first.first + it->first.second > order_ ? c_.erase(it) : std::next(it);
        }
    }

    int order_ = kDefaultJetOrder;
    std::map<std::pair<int, int>, S> c_;
};

template <class S>
Jet2<S>
operator+(Jet2<S> a, const Jet2<S>& b) {
    return a += b;
}

template <class S>
Jet2<S>
operator-(Jet2<S> a, const Jet2<S>& b) {
    return a -= b;
}

template <class S>
Jet2<S>
operator*(Jet2<S> a, const Jet2<S>& b) {
    return a *= b;
}

template <class S>
Jet2<S>
operator*(Jet2<S> a, const S& b) {
    return a *= b;
}

// exp(x) - 1 for a jet without constant term.
template <class S>
Jet2<S>
exp_minus_one(const Jet2<S>& x) {
    if (!ScalarTraits<S>::is_zero(x.coefficient(0, 0))) {
        throw DomainError("exp - 1 needs a jet vanishing at the origin");
    }
    Jet2<S> sum(x.order());
    Jet2<S> power = x;
    mpz_class fact = 1;
    for (int n = 1; n <= x.order(); ++n) {
        fact *= n;
        sum += power.scaled(mpq_class(1, fact));
        power *= x;
    }
    return sum;
}

// f / g for one-variable jets in k - 2 with f(2) = 0, g(2) = 0 and g'(2)
// invertible. The quotient is known to one order less.
template <class S>
Jet2<S>
divide_in_k(const Jet2<S>& f, const Jet2<S>& g) {
    using T = ScalarTraits<S>;
    if (!f.depends_only_on_k() || !g.depends_only_on_k()) {
        throw DomainError("division is defined for jets in k - 2 only");
    }
    if (!T::is_zero(f.coefficient(0, 0))) {
        throw DomainError("not divisible: nonzero value at k = 2");
    }
    if (!T::is_zero(g.coefficient(0, 0))) {
        throw DomainError("divisor must vanish at k = 2");
    }
    const int n = std::min(f.order(), g.order()) - 1;
    if (n < 0) {
        throw PrecisionError("jets too short to divide");
    }
    S lead_inv = T::inverse(g.coefficient(1, 0));
    Jet2<S> q(n);
    std::vector<S> qs;
    for (int d = 0; d <= n; ++d) {
        S acc = f.coefficient(d + 1, 0);
        for (int m = 1; m <= d; ++m) {
            acc -= g.coefficient(m + 1, 0) * qs[d - m];
        }
        qs.push_back(acc * lead_inv);
        q.set(d, 0, qs.back());
    }
    return q;
}

}  // namespace excezero::jets
