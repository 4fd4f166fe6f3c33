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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "excezero/errors.hpp"
#include "excezero/jets/jet2.hpp"

namespace excezero::jets {

// Name of the distinguished Tate-period class.
inline const std::string kTatePeriod = "q_A";

// The axiomatic data of the height-weight pairing: L = log_p(q_A) and, per
// tracked class x, lambda_x = log_A(res_p x); per pair, the cyclotomic part c
// (symmetric) and the weight part w of <x, y> = c {s-1} + w {k-2}.
template <class S>
class PairingTable {
 public:
    explicit PairingTable(S log_q) : log_q_(std::move(log_q)) {
    }

    // Every entry a fresh indeterminate: L, lambda_x, c_x_y (x <= y), w_x_y.
    static PairingTable
    generic(const std::vector<std::string>& classes);

    const S&
    log_q() const {
        return log_q_;
    }

    bool
    tracks(const std::string& x) const {
        return lambda_.count(x) != 0;
    }

    const std::vector<std::string>&
    classes() const {
        return order_;
    }

    void
    add_class(const std::string& x, S lambda) {
        if (x == kTatePeriod) {
            throw ValidationError("the Tate period is not a tracked class");
        }
        if (!tracks(x)) {
            order_.push_back(x);
        }
        lambda_[x] = std::move(lambda);
    }

    void
    set_cyc(const std::string& x, const std::string& y, S c) {
        need(x);
        need(y);
        cyc_[key_sym(x, y)] = std::move(c);
    }

    void
    set_wt(const std::string& x, const std::string& y, S w) {
        need(x);
        need(y);
        wt_[{x, y}] = std::move(w);
    }

    const S&
    lambda(const std::string& x) const {
        need(x);
        return lambda_.at(x);
    }

    const S&
    cyc(const std::string& x, const std::string& y) const {
        auto it = cyc_.find(key_sym(x, y));
        if (it == cyc_.end()) {
            throw LookupError("no cyclotomic entry for (" + x + ", " + y + ")");
        }
        return it->second;
    }

    const S&
    wt(const std::string& x, const std::string& y) const {
        auto it = wt_.find({x, y});
        if (it == wt_.end()) {
            throw LookupError("no weight entry for (" + x + ", " + y + ")");
        }
        return it->second;
    }

 private:
    static std::pair<std::string, std::string>
    key_sym(const std::string& x, const std::string& y) {
        return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
    }

    void
    need(const std::string& x) const {
        if (!tracks(x)) {
            throw LookupError("untracked class " + x);
        }
    }

    S log_q_;
    std::vector<std::string> order_;
    std::map<std::string, S> lambda_;
    std::map<std::pair<std::string, std::string>, S> cyc_;
    std::map<std::pair<std::string, std::string>, S> wt_;
};

template <>
inline PairingTable<LaurentPoly>
PairingTable<LaurentPoly>::generic(const std::vector<std::string>& classes) {
    PairingTable<LaurentPoly> t(LaurentPoly::symbol("L"));
    for (const auto& x : classes) {
        t.add_class(x, LaurentPoly::symbol("lambda_" + x));
    }
    for (const auto& x : classes) {
        for (const auto& y : classes) {
            if (x <= y) {
                t.set_cyc(x, y, LaurentPoly::symbol("c_" + x + "_" + y));
            }
            t.set_wt(x, y, LaurentPoly::symbol("w_" + x + "_" + y));
        }
    }
    return t;
}

// The class of <x, y> in J / J^2, carried in a jet of the given order. The
// pair (x, q_A) is obtained from (q_A, x) through the functional equation
// <y, x>(k, s) = -<x, y>(k, k - s).
template <class S>
Jet2<S>
hw_pairing(const std::string& x, const std::string& y, const PairingTable<S>& t,
           int order = kDefaultJetOrder) {
    using J = Jet2<S>;
    const bool xq = x == kTatePeriod;
    const bool yq = y == kTatePeriod;
    if (xq && yq) {
        // L {s - k/2} = L ({s-1} - 1/2 {k-2})
        return J::monomial(0, 1, t.log_q(), order) +
               J::monomial(1, 0, t.log_q(), order).scaled(mpq_class(-1, 2));
    }
    if (xq) {
        return J::monomial(0, 1, t.lambda(y), order);
    }
    if (yq) {
        return -hw_pairing(kTatePeriod, x, t, order).reflect();
    }
    return J::monomial(0, 1, t.cyc(x, y), order) + J::monomial(1, 0, t.wt(x, y), order);
}

// det [[<q,q>, <q,x>], [<x,q>, <x,x>]] as a class in J^2 / J^3.
template <class S>
Jet2<S>
extended_height(const std::string& x, const PairingTable<S>& t, int order = kDefaultJetOrder) {
    if (order < 2) {
        throw PrecisionError("the height lives in degree 2");
    }
    auto qq = hw_pairing(kTatePeriod, kTatePeriod, t, order);
    auto qx = hw_pairing(kTatePeriod, x, t, order);
    auto xq = hw_pairing(x, kTatePeriod, t, order);
    auto xx = hw_pairing(x, x, t, order);
    return (qq * xx - qx * xq).homogeneous(2);
}

// d^2/dk^2 of h(k, k/2) at k = 2.
template <class S>
S
central_critical_value(const Jet2<S>& h) {
    return h.restrict_central().derivative(2, 0);
}

// <x, x>^Sch = c - lambda^2 / L
template <class S>
S
schneider_height(const std::string& x, const PairingTable<S>& t) {
    return t.cyc(x, x) - t.lambda(x) * t.lambda(x) * ScalarTraits<S>::inverse(t.log_q());
}

template <class S>
struct ConstraintRelation {
    std::string x;
    std::string y;
    // which coefficient of <y,x>(k,s) + <x,y>(k,k-s): "k-2" or "s-1"
    std::string monomial;
    S value;
    bool holds = false;
};

template <class S>
struct ConstraintReport {
    std::vector<ConstraintRelation<S>> relations;
    bool consistent = true;
};

// Imposes <y,x>(k,s) = -<x,y>(k,k-s) on every pair of tracked classes and
// on the Tate period and reports each coefficient of the difference. For a
// generic table the diagonal yields 2 w + c = 0.
template <class S>
ConstraintReport<S>
functional_equation_constraint(const PairingTable<S>& t) {
    ConstraintReport<S> out;
    std::vector<std::string> all{kTatePeriod};
    all.insert(all.end(), t.classes().begin(), t.classes().end());
    for (size_t a = 0; a < all.size(); ++a) {
        for (size_t b = a; b < all.size(); ++b) {
            const auto& x = all[a];
            const auto& y = all[b];
            auto lhs = hw_pairing(y, x, t, 1) + hw_pairing(x, y, t, 1).reflect();
            const char* names[2] = {"k-2", "s-1"};
            for (int m = 0; m < 2; ++m) {
                ConstraintRelation<S> r{x, y, names[m], lhs.coefficient(m == 0 ? 1 : 0, m == 0 ? 0 : 1),
                                        false};
                r.holds = ScalarTraits<S>::is_zero(r.value);
                out.consistent = out.consistent && r.holds;
                out.relations.push_back(std::move(r));
            }
        }
    }
    return out;
}

// Sets w_{y,x} from the functional equation for every ordered pair:
// w_{y,x} = -c_{x,y} - w_{x,y}, so that on the diagonal w = -c/2.
template <class S>
PairingTable<S>
impose_functional_equation(PairingTable<S> t) {
    const auto& cls = t.classes();
    for (size_t a = 0; a < cls.size(); ++a) {
        const auto& x = cls[a];
        t.set_wt(x, x, ScalarTraits<S>::scale(t.cyc(x, x), mpq_class(-1, 2)));
        for (size_t b = a + 1; b < cls.size(); ++b) {
            const auto& y = cls[b];
            t.set_wt(y, x, S() - t.cyc(x, y) - t.wt(x, y));
        }
    }
    return t;
}

}  // namespace excezero::jets
