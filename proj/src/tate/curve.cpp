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

#include "excezero/tate/curve.hpp"

#include <mutex>
#include <sstream>

#include "excezero/errors.hpp"
#include "excezero/kernels/frobenius.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::tate {

bool
FrobeniusCache::lookup(long ell, long& out) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(ell);
    if (it == values_.end()) {
        return false;
    }
    out = it->second;
    return true;
}

void
FrobeniusCache::insert(long ell, long value) {
    std::unique_lock lock(mutex_);
    values_.emplace(ell, value);
}

size_t
FrobeniusCache::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

const char*
to_string(Reduction r) {
    switch (r) {
        case Reduction::good:
            return "good";
        case Reduction::split_multiplicative:
            return "split multiplicative";
        case Reduction::nonsplit_multiplicative:
            return "nonsplit multiplicative";
        case Reduction::additive:
            return "additive";
    }
    return "?";
}

CurveData
CurveData::make(std::string label, const std::array<mpq_class, 5>& a, long p, int sign) {
    CurveData e;
    e.label_ = std::move(label);
    for (int i = 0; i < 5; ++i) {
        if (a[i].get_den() != 1) {
            throw ValidationError("curve " + e.label_ + ": a-invariants must be integral (minimal model)");
        }
        e.a_[i] = a[i].get_num();
    }
    if (p < 5 || !padic::is_prime(p)) {
        throw ValidationError("curve " + e.label_ + ": p must be a prime >= 5");
    }
    if (sign != 0 && sign != 1 && sign != -1) {
        throw ValidationError("curve " + e.label_ + ": sign must be +1 or -1");
    }
    e.p_ = p;
    e.sign_ = sign;
    const auto& [a1, a2, a3, a4, a6] = e.a_;
    e.b2_ = a1 * a1 + 4 * a2;
    e.b4_ = 2 * a4 + a1 * a3;
    e.b6_ = a3 * a3 + 4 * a6;
    e.b8_ = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    e.c4_ = e.b2_ * e.b2_ - 24 * e.b4_;
    e.c6_ = -e.b2_ * e.b2_ * e.b2_ + 36 * e.b2_ * e.b4_ - 216 * e.b6_;
    e.delta_ = -e.b2_ * e.b2_ * e.b8_ - 8 * e.b4_ * e.b4_ * e.b4_ - 27 * e.b6_ * e.b6_ + 9 * e.b2_ * e.b4_ * e.b6_;
    if (e.delta_ == 0) {
        throw ValidationError("curve " + e.label_ + ": singular model (discriminant 0)");
    }
    e.cache_ = std::make_shared<FrobeniusCache>();
    return e;
}

mpq_class
CurveData::j_invariant() const {
    mpq_class j(c4_ * c4_ * c4_, delta_);
    j.canonicalize();
    return j;
}

std::string
CurveData::model_string() const {
    std::ostringstream out;
    out << "[" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3] << "," << a_[4] << "]";
    return out.str();
}

namespace {

long
count_mod2(const CurveData& e) {
    long count = 1;
    for (long x = 0; x < 2; ++x) {
        for (long y = 0; y < 2; ++y) {
            const auto& a = e.a();
            mpz_class lhs = y * y + a[0] * x * y + a[2] * y;
            mpz_class rhs = x * x * x + a[1] * x * x + a[3] * x + a[4];
            if ((lhs - rhs) % 2 == 0) {
                ++count;
            }
        }
    }
    return 3 - count;
}

uint32_t
reduce(const mpz_class& v, long ell) {
    return static_cast<uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), ell));
}

long
compute_a_ell(const CurveData& e, long ell) {
    if (ell == 2) {
        return count_mod2(e);
    }
    if (ell >= (1L << 30)) {
        throw DomainError("a_ell: prime too large for point counting");
    }
    auto chi = kernels::quadratic_character_table(static_cast<uint32_t>(ell));
    // #E(F_ell) = ell + 1 + sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6)
    int64_t s = kernels::cubic_character_sum(static_cast<uint32_t>(ell), chi.data(), reduce(4, ell),
                                             reduce(e.b2(), ell), reduce(2 * e.b4(), ell), reduce(e.b6(), ell));
    return -s;
}

}  // namespace

long
a_ell(const CurveData& e, long ell) {
    long value = 0;
    if (e.frobenius_cache().lookup(ell, value)) {
        return value;
    }
    value = compute_a_ell(e, ell);
    e.frobenius_cache().insert(ell, value);
    return value;
}

std::vector<long>
an_table(const CurveData& e, long nmax) {
    std::vector<long> spf(nmax + 1, 0);
    for (long i = 2; i <= nmax; ++i) {
        if (spf[i] == 0) {
            for (long j = i; j <= nmax; j += i) {
                if (spf[j] == 0) {
                    spf[j] = i;
                }
            }
        }
    }
    std::vector<long> an(nmax + 1, 0);
    if (nmax >= 1) {
        an[1] = 1;
    }
    for (long n = 2; n <= nmax; ++n) {
        long q = spf[n];
        long m = n;
        int k = 0;
        while (m % q == 0) {
            m /= q;
            ++k;
        }
        if (m > 1) {
            an[n] = an[n / m] * an[m];
            continue;
        }
        long aq = a_ell(e, q);
        if (k == 1) {
            an[n] = aq;
        } else if (e.discriminant() % q == 0) {
            an[n] = an[n / q] * aq;
        } else {
            an[n] = aq * an[n / q] - q * an[n / q / q];
        }
    }
    return an;
}

std::vector<long>
bad_primes(const CurveData& e) {
    std::vector<long> out;
    mpz_class d = abs(e.discriminant());
    for (long q = 2; q < 1000000 && q * q <= d; ++q) {
        if (d % q == 0) {
            out.push_back(q);
            while (d % q == 0) {
                d /= q;
            }
        }
    }
    if (d > 1) {
        if (mpz_probab_prime_p(d.get_mpz_t(), 30) == 0 || !d.fits_slong_p()) {
            throw ValidationError("curve " + e.label() + ": cannot factor the discriminant");
        }
        out.push_back(d.get_si());
    }
    return out;
}

int
ord_discriminant(const CurveData& e, long p) {
    return padic::valuation(e.discriminant(), p);
}

Reduction
reduction_type(const CurveData& e, long q) {
    if (e.discriminant() % q != 0) {
        return Reduction::good;
    }
    if (e.c4() % q == 0) {
        return Reduction::additive;
    }
    return a_ell(e, q) == 1 ? Reduction::split_multiplicative : Reduction::nonsplit_multiplicative;
}

long
semistable_conductor(const CurveData& e) {
    long n = 1;
    for (long q : bad_primes(e)) {
        if (reduction_type(e, q) == Reduction::additive) {
            throw ValidationError("curve " + e.label() + ": additive reduction at " + std::to_string(q) +
                                  " (only semistable curves are supported)");
        }
        n *= q;
    }
    return n;
}

SplitCheck
check_split_multiplicative(const CurveData& e, long p) {
    SplitCheck out;
    out.reduction = reduction_type(e, p);
    out.ap = a_ell(e, p);
    mpz_class mc6 = -e.c6();
    out.legendre_minus_c6 = padic::is_prime(p) && p > 2 ? mpz_legendre(mc6.get_mpz_t(), mpz_class(p).get_mpz_t()) : 0;
    switch (out.reduction) {
        case Reduction::good:
            out.diagnostic = "good reduction at " + std::to_string(p);
            break;
        case Reduction::additive:
            out.diagnostic = "additive reduction at " + std::to_string(p);
            break;
        case Reduction::nonsplit_multiplicative:
            out.diagnostic = "nonsplit multiplicative reduction at " + std::to_string(p) + " (a_p = -1)";
            break;
        case Reduction::split_multiplicative:
            if (out.legendre_minus_c6 != 1) {
                out.diagnostic = "a_p = +1 but -c6 is not a square mod p";
            } else {
                out.split = true;
                out.diagnostic = "split multiplicative reduction at " + std::to_string(p);
            }
            break;
    }
    return out;
}

}  // namespace excezero::tate
