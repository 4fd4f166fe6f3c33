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

#include "excezero/jets/lfunction_jets.hpp"

namespace excezero::jets {

TateScalars
tate_scalars(const tate::TateParameter& t) {
    using padic::PadicNumber;
    if (t.ord_q == 0) {
        throw DomainError("ord_p(q) must be nonzero");
    }
    const int n = t.l_invariant.precision() + 2;
    TateScalars s;
    s.ord_q = PadicNumber::from_integer(t.p, t.ord_q, n);
    s.euler = PadicNumber::one(t.p, n) - PadicNumber::from_parts(t.p, -1, 1, n);
    s.l_invariant = t.l_invariant;
    s.log_q = t.l_invariant * s.ord_q;
    return s;
}

}  // namespace excezero::jets
