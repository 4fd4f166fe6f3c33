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

#include <vector>

#include "excezero/jets/pairing.hpp"
#include "excezero/tate/tate_period.hpp"

namespace excezero::jets {

// First-order jet of the two-variable L-function of a class with dual
// exponential exp_star:
//   (1 / ord q) (1 - 1/p)^-1 exp_star <q_A, q_A>   mod J^2.
// euler is the scalar 1 - 1/p.
template <class S>
Jet2<S>
rubin_jet(const S& exp_star, const S& ord_q, const S& euler, const S& log_q,
          int order = kDefaultJetOrder) {
    if (ScalarTraits<S>::is_zero(ord_q)) {
        throw DomainError("ord_p(q) must be nonzero");
    }
    PairingTable<S> t(log_q);
    S factor = ScalarTraits<S>::inverse(ord_q) * ScalarTraits<S>::inverse(euler) * exp_star;
    return (hw_pairing(kTatePeriod, kTatePeriod, t, order) * factor).homogeneous(1);
}

// Second-order version: the jet with lambda * jet = -(1/ord q)(1 - 1/p)^-1 h
// mod J^3, h being an extended height.
template <class S>
Jet2<S>
rubin_jet_squared(const S& lambda, const Jet2<S>& height, const S& ord_q, const S& euler) {
    if (ScalarTraits<S>::is_zero(ord_q)) {
        throw DomainError("ord_p(q) must be nonzero");
    }
    S factor = ScalarTraits<S>::inverse(ord_q) * ScalarTraits<S>::inverse(euler) *
               ScalarTraits<S>::inverse(lambda);
    return -(height.homogeneous(2) * factor);
}

// p-adic inputs read off a Tate parameter.
struct TateScalars {
    padic::PadicNumber ord_q;
    padic::PadicNumber euler;
    padic::PadicNumber log_q;
    padic::PadicNumber l_invariant;
};

TateScalars
tate_scalars(const tate::TateParameter& t);

inline Jet2<padic::PadicNumber>
rubin_jet(const padic::PadicNumber& exp_star, const tate::TateParameter& t,
          int order = kDefaultJetOrder) {
    auto s = tate_scalars(t);
    return rubin_jet(exp_star, s.ord_q, s.euler, s.log_q, order);
}

// The jet of the improved function L*: jet_l divided by the jet of
// 1 - a_p(k)^-1, of which only the linear term -L_p/2 (k - 2) is known. The
// quotient's value is jet_l's linear coefficient over that term; its slope
// is determined only when that value is zero (jet_l in J^2), and the result
// is truncated to order 0 otherwise.
template <class S>
Jet2<S>
improved_factor(const Jet2<S>& jet_l, const S& l_invariant) {
    if (!jet_l.depends_only_on_k()) {
        throw DomainError("restrict to s = 1 before dividing");
    }
    auto divisor =
        Jet2<S>::monomial(1, 0, ScalarTraits<S>::scale(l_invariant, mpq_class(-1, 2)), 2);
    auto q = divide_in_k(jet_l.truncated(2), divisor);
    return ScalarTraits<S>::is_zero(q.coefficient(0, 0)) ? q : q.truncated(0);
}

// Image of sum a_ij varpi^i sigma^j under varpi -> exp((k-2) log_gamma) - 1,
// sigma -> exp((s-1) log_chi) - 1. coeffs[i][j] holds a_ij.
template <class S>
Jet2<S>
mellin_jet(const std::vector<std::vector<S>>& coeffs, const S& log_gamma, const S& log_chi,
           int order = kDefaultJetOrder) {
    const auto w = exp_minus_one(Jet2<S>::monomial(1, 0, log_gamma, order));
    const auto g = exp_minus_one(Jet2<S>::monomial(0, 1, log_chi, order));
    Jet2<S> out(order);
    Jet2<S> wi;  // w^i; unset while i = 0
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i == 1) {
            wi = w;
        } else if (i > 1) {
            wi *= w;
        }
        Jet2<S> gj;
        for (size_t j = 0; j < coeffs[i].size(); ++j) {
            if (j == 1) {
                gj = g;
            } else if (j > 1) {
                gj *= g;
            }
            const S& a = coeffs[i][j];
            if (ScalarTraits<S>::is_zero(a)) {
                continue;
            }
            if (i == 0 && j == 0) {
                out += Jet2<S>::monomial(0, 0, a, order);
            } else if (i == 0) {
                out += gj * a;
            } else if (j == 0) {
                out += wi * a;
            } else {
                out += wi * gj * a;
            }
        }
    }
    return out;
}

}  // namespace excezero::jets
