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

#include "excezero/tate/formal_log.hpp"

#include <algorithm>

#include "excezero/errors.hpp"
#include "excezero/padic/padic_functions.hpp"

namespace excezero::tate {

namespace {

bool
is_zero_value(const mpq_class& v) {
    return v == 0;
}

bool
is_zero_value(const PadicNumber& v) {
    return v.is_zero();
}

// Chord-and-tangent on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <typename Point, typename T>
Point
affine_add(const std::array<T, 5>& a, const Point& p1, const Point& p2) {
    if (p1.infinity) {
        return p2;
    }
    if (p2.infinity) {
        return p1;
    }
    const auto& [a1, a2, a3, a4, a6] = a;
    T lambda;
    if (is_zero_value(p1.x - p2.x)) {
        T denom = p1.y + p2.y + a1 * p2.x + a3;
        if (is_zero_value(denom)) {
            Point o;
            o.infinity = true;
            return o;
        }
        T num = p1.x * p1.x + p1.x * p1.x + p1.x * p1.x + (a2 + a2) * p1.x + a4 - a1 * p1.y;
        lambda = num / denom;
    } else {
        lambda = (p2.y - p1.y) / (p2.x - p1.x);
    }
    T nu = p1.y - lambda * p1.x;
    Point r;
    r.x = lambda * lambda + a1 * lambda - a2 - p1.x - p2.x;
    r.y = -(lambda + a1) * r.x - nu - a3;
    return r;
}

std::array<mpq_class, 5>
rational_coefficients(const CurveData& e) {
    std::array<mpq_class, 5> out;
    for (int i = 0; i < 5; ++i) {
        out[i] = mpq_class(e.a()[i]);
    }
    return out;
}

std::array<PadicNumber, 5>
padic_coefficients(const CurveData& e, long p, int precision) {
    std::array<PadicNumber, 5> out;
    for (int i = 0; i < 5; ++i) {
        out[i] = e.a()[i] == 0 ? PadicNumber::exact_zero(p) : PadicNumber::from_integer(p, e.a()[i], precision);
    }
    return out;
}

struct Projective {
    PadicNumber x, y, z;
    bool infinity = false;
};

void
rescale(Projective& pt) {
    int vmin = std::min({pt.x.valuation(), pt.y.valuation(), pt.z.valuation()});
    if (vmin != 0 && vmin != padic::kExactPrecision) {
        pt.x = pt.x.shift(-vmin);
        pt.y = pt.y.shift(-vmin);
        pt.z = pt.z.shift(-vmin);
    }
}

class ShortModel {
 public:
    ShortModel(const CurveData& e, long p, int precision) : p_(p) {
        a_ = PadicNumber::from_rational(p, mpq_class(-e.c4(), 48), precision);
        b_ = PadicNumber::from_rational(p, mpq_class(-e.c6(), 864), precision);
    }

    Projective
    dbl(const Projective& pt) const {
        if (pt.infinity || pt.y.is_zero()) {
            return infinity();
        }
        PadicNumber w = a_ * pt.z * pt.z + PadicNumber::from_integer(p_, 3, prec()) * pt.x * pt.x;
        PadicNumber s = pt.y * pt.z;
        PadicNumber bb = pt.x * pt.y * s;
        PadicNumber h = w * w - bb.shift(0) * PadicNumber::from_integer(p_, 8, prec());
        Projective r;
        r.x = PadicNumber::from_integer(p_, 2, prec()) * h * s;
        r.y = w * (PadicNumber::from_integer(p_, 4, prec()) * bb - h) -
              PadicNumber::from_integer(p_, 8, prec()) * pt.y * pt.y * s * s;
        r.z = PadicNumber::from_integer(p_, 8, prec()) * s * s * s;
        return finish(r);
    }

    Projective
    add(const Projective& p1, const Projective& p2) const {
        if (p1.infinity) {
            return p2;
        }
        if (p2.infinity) {
            return p1;
        }
        PadicNumber u = p2.y * p1.z - p1.y * p2.z;
        PadicNumber v = p2.x * p1.z - p1.x * p2.z;
        if (v.is_zero()) {
            return u.is_zero() ? dbl(p1) : infinity();
        }
        PadicNumber vv = v * v;
        PadicNumber vvv = vv * v;
        PadicNumber r2 = vv * p1.x * p2.z;
        PadicNumber aa = u * u * p1.z * p2.z - vvv - PadicNumber::from_integer(p_, 2, prec()) * r2;
        Projective r;
        r.x = v * aa;
        r.y = u * (r2 - aa) - vvv * p1.y * p2.z;
        r.z = vvv * p1.z * p2.z;
        return finish(r);
    }

    Projective
    multiply(Projective pt, long m) const {
        Projective acc = infinity();
        while (m > 0) {
            if (m & 1) {
                acc = add(acc, pt);
            }
            m >>= 1;
            if (m > 0) {
                pt = dbl(pt);
            }
        }
        return acc;
    }

 private:
    static Projective
    infinity() {
        Projective o;
        o.infinity = true;
        return o;
    }

    Projective
    finish(Projective r) const {
        rescale(r);
        if (r.z.is_zero() && r.x.is_zero()) {
            r.infinity = true;
        }
        return r;
    }

    int
    prec() const {
        return a_.precision() + 4;
    }

    long p_;
    PadicNumber a_, b_;
};

PadicNumber
evaluate_log(const std::vector<PadicNumber>& omega, const PadicNumber& t) {
    long p = t.prime();
    PadicNumber sum = PadicNumber::exact_zero(p);
    PadicNumber tp = t;
    for (size_t j = 0; j < omega.size(); ++j) {
        sum += omega[j] * tp / PadicNumber::from_integer(p, static_cast<long>(j) + 1, tp.precision() + 4);
        tp *= t;
    }
    return sum;
}

int
series_terms(int precision, int vt, long p) {
    int k = 1;
    auto bad = [&](int j) {
        int e = 0;
        for (long q = p; q <= j; q *= p) {
            ++e;
        }
        return j * vt - e < precision;
    };
    while (bad(k)) {
        ++k;
    }
    return k + 1;
}

}  // namespace

bool
on_curve(const CurveData& e, const RationalPoint& pt) {
    if (pt.infinity) {
        return true;
    }
    auto a = rational_coefficients(e);
    mpq_class lhs = pt.y * pt.y + a[0] * pt.x * pt.y + a[2] * pt.y;
    mpq_class rhs = pt.x * pt.x * pt.x + a[1] * pt.x * pt.x + a[3] * pt.x + a[4];
    return lhs == rhs;
}

RationalPoint
add_points(const CurveData& e, const RationalPoint& a, const RationalPoint& b) {
    return affine_add<RationalPoint>(rational_coefficients(e), a, b);
}

PadicPoint
add_points(const CurveData& e, const PadicPoint& a, const PadicPoint& b) {
    long p = a.infinity ? b.x.prime() : a.x.prime();
    int prec = std::max(a.infinity ? 0 : a.x.precision(), b.infinity ? 0 : b.x.precision()) + 4;
    return affine_add<PadicPoint>(padic_coefficients(e, p, prec), a, b);
}

int
torsion_order(const CurveData& e, const RationalPoint& pt) {
    RationalPoint acc = pt;
    for (int n = 1; n <= 12; ++n) {
        if (acc.infinity) {
            return n;
        }
        acc = add_points(e, acc, pt);
    }
    return 0;
}

PadicPoint
lift_x(const CurveData& e, const PadicNumber& x) {
    long p = x.prime();
    int prec = x.precision();
    PadicNumber xs = x + PadicNumber::from_rational(p, mpq_class(e.b2(), 12), prec);
    PadicNumber aa = PadicNumber::from_rational(p, mpq_class(-e.c4(), 48), prec);
    PadicNumber bb = PadicNumber::from_rational(p, mpq_class(-e.c6(), 864), prec);
    PadicNumber rhs = xs * xs * xs + aa * xs + bb;
    PadicNumber ys = padic::padic_sqrt(rhs);
    PadicPoint out;
    out.x = x;
    PadicNumber a1 = PadicNumber::from_integer(p, e.a()[0], prec);
    PadicNumber a3 = PadicNumber::from_integer(p, e.a()[2], prec);
    out.y = ys - (a1 * x + a3) / PadicNumber::from_integer(p, 2, prec);
    return out;
}

std::vector<PadicNumber>
invariant_differential(const CurveData& e, long p, int terms, int precision) {
    PadicNumber aa = PadicNumber::from_rational(p, mpq_class(-e.c4(), 48), precision);
    PadicNumber bb = PadicNumber::from_rational(p, mpq_class(-e.c6(), 864), precision);
    auto zero = PadicNumber::exact_zero(p);
    auto mul = [&](const std::vector<PadicNumber>& f, const std::vector<PadicNumber>& g) {
        std::vector<PadicNumber> h(terms, zero);
        for (int i = 0; i < terms; ++i) {
            if (f[i].is_exact_zero()) {
                continue;
            }
            for (int j = 0; i + j < terms; ++j) {
                if (!g[j].is_exact_zero()) {
                    h[i + j] += f[i] * g[j];
                }
            }
        }
        return h;
    };
    // W = w / t^3 solves W = 1 + A t^4 W^2 + B t^6 W^3; each pass fixes four more terms.
    std::vector<PadicNumber> w(terms, zero);
    w[0] = PadicNumber::one(p, precision);
    for (int pass = 0; pass <= terms / 4 + 1; ++pass) {
        auto w2 = mul(w, w);
        auto w3 = mul(w2, w);
        std::vector<PadicNumber> next(terms, zero);
        next[0] = PadicNumber::one(p, precision);
        for (int k = 4; k < terms; ++k) {
            next[k] += aa * w2[k - 4];
        }
        for (int k = 6; k < terms; ++k) {
            next[k] += bb * w3[k - 6];
        }
        w = std::move(next);
    }
    // omega = 1 + t W' / (2 W)
    std::vector<PadicNumber> winv(terms, zero);
    winv[0] = PadicNumber::one(p, precision);
    for (int k = 1; k < terms; ++k) {
        PadicNumber s = zero;
        for (int i = 1; i <= k; ++i) {
            if (!w[i].is_exact_zero()) {
                s += w[i] * winv[k - i];
            }
        }
        winv[k] = -s;
    }
    std::vector<PadicNumber> twp(terms, zero);
    for (int k = 1; k < terms; ++k) {
        if (!w[k].is_exact_zero()) {
            twp[k] = w[k] * PadicNumber::from_integer(p, k, precision);
        }
    }
    auto q = mul(twp, winv);
    PadicNumber half = PadicNumber::from_rational(p, mpq_class(1, 2), precision);
    std::vector<PadicNumber> omega(terms, zero);
    for (int k = 0; k < terms; ++k) {
        omega[k] = q[k].is_exact_zero() ? zero : q[k] * half;
    }
    omega[0] += PadicNumber::one(p, precision);
    return omega;
}

PadicNumber
formal_log(const CurveData& e, long p, const PadicPoint& pt, int precision) {
    if (pt.infinity) {
        return PadicNumber::exact_zero(p);
    }
    auto check = check_split_multiplicative(e, p);
    if (!check.split) {
        throw DomainError("formal_log: " + check.diagnostic);
    }
    long m = (p - 1) * ord_discriminant(e, p);
    int vm = 0;
    for (long mm = m; mm % p == 0; mm /= p) {
        ++vm;
    }
    for (int guard = 8; guard <= 64; guard *= 2) {
        int work = precision + vm + guard;
        ShortModel model(e, p, work);
        Projective q0;
        q0.x = pt.x.lift(work) + PadicNumber::from_rational(p, mpq_class(e.b2(), 12), work);
        PadicNumber a1 = PadicNumber::from_integer(p, e.a()[0], work);
        PadicNumber a3 = PadicNumber::from_integer(p, e.a()[2], work);
        q0.y = (pt.y.lift(work) + pt.y.lift(work) + a1 * pt.x.lift(work) + a3) *
               PadicNumber::from_rational(p, mpq_class(1, 2), work);
        q0.z = PadicNumber::one(p, work);
        Projective mp = model.multiply(q0, m);
        if (mp.infinity || mp.x.is_zero()) {
            return PadicNumber::zero(p, precision);
        }
        PadicNumber t = -(mp.x / mp.y);
        if (t.valuation() < 1) {
            throw ConstructionError("formal_log: multiple of the point left the kernel of reduction");
        }
        int terms = series_terms(work, t.valuation(), p);
        auto omega = invariant_differential(e, p, terms, work);
        PadicNumber value = evaluate_log(omega, t) / PadicNumber::from_integer(p, m, work + 4);
        int wanted = std::min(precision, std::min(pt.x.precision(), pt.y.precision()));
        if (value.precision() >= wanted) {
            return value.truncate(wanted);
        }
    }
    throw PrecisionError("formal_log: could not reach the requested precision");
}

PadicNumber
formal_log(const CurveData& e, long p, const RationalPoint& pt, int precision) {
    if (!on_curve(e, pt)) {
        throw DomainError("formal_log: point is not on the curve");
    }
    if (pt.infinity || torsion_order(e, pt) != 0) {
        return PadicNumber::exact_zero(p);
    }
    PadicPoint q;
    q.x = PadicNumber::from_rational(p, pt.x, precision + 10);
    q.y = PadicNumber::from_rational(p, pt.y, precision + 10);
    return formal_log(e, p, q, precision);
}

}  // namespace excezero::tate
