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

#include "excezero/mtt/modular_symbols.hpp"

#include <numeric>

#include "excezero/errors.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::mtt {

namespace bmp = boost::multiprecision;

std::vector<long>
ModularSymbolTable::denominators() const {
    std::vector<long> out;
    for (const auto& [m, _] : symbols_) {
        out.push_back(m);
    }
    return out;
}

mpq_class
ModularSymbolTable::symbol(const mpz_class& a, long m) const {
    if (m <= 0) {
        throw DomainError("symbol denominator must be positive");
    }
    mpz_class g = gcd(a, mpz_class(m));
    long mm = m / g.get_si();
    auto it = symbols_.find(mm);
    if (it == symbols_.end()) {
        throw LookupError("no symbols tabulated for denominator " + std::to_string(mm));
    }
    mpz_class r = (a / g) % mm;
    if (r < 0) {
        r += mm;
    }
    return it->second[r.get_si()];
}

mpq_class
ModularSymbolTable::symbol(const mpq_class& r) const {
    if (!r.get_den().fits_slong_p()) {
        throw DomainError("symbol denominator too large");
    }
    return symbol(r.get_num(), r.get_den().get_si());
}

ModularSymbolBuilder::ModularSymbolBuilder(const tate::CurveData& e, SymbolConfig config)
    : curve_(e), config_(config) {
    if (config_.digits < 20 || config_.digits > kRealDigits - 8) {
        throw ValidationError("symbol digits must lie in [20, " + std::to_string(kRealDigits - 8) +
                              "]");
    }
}

ModularSymbolBuilder&
ModularSymbolBuilder::require(long m) {
    if (m <= 0) {
        throw DomainError("symbol denominator must be positive");
    }
    wanted_.insert(m);
    return *this;
}

ModularSymbolBuilder&
ModularSymbolBuilder::require_prime_powers(int nu) {
    long m = 1;
    for (int k = 0; k <= nu; ++k) {
        wanted_.insert(m);
        m *= curve_.p();
    }
    return *this;
}

namespace {

long
inverse_mod(long a, long m) {
    mpz_class inv;
    mpz_class am(a), mm(m);
    if (mpz_invert(inv.get_mpz_t(), am.get_mpz_t(), mm.get_mpz_t()) == 0) {
        return 0;
    }
    return inv.get_si();
}

}  // namespace

std::shared_ptr<const ModularSymbolTable>
ModularSymbolBuilder::freeze() {
    std::shared_ptr<ModularSymbolTable> table(new ModularSymbolTable(curve_));
    table->level_ = level_data(curve_);
    table->omega_plus_ = real_period(curve_);
    table->record_.digits = config_.digits;
    const long conductor = table->level_.conductor;

    // Path split at height t = 1/(m sqrt(Q)) with Q = N / gcd(m, N):
    // [a/m]^+ Omega = S(a) - w_Q S((Q a)^-1 mod m),
    // S(b) = sum_n a_n/n exp(-2 pi n t) cos(2 pi n b / m).
    long nmax_all = 0;
    for (long m : wanted_) {
        long q = conductor / std::gcd(m, conductor);
        Real t = 1 / (Real(m) * bmp::sqrt(Real(q)));
        nmax_all = std::max(nmax_all, truncation_bound(t, config_.digits + 4));
    }
    std::vector<long> an = tate::an_table(curve_, nmax_all);
    table->record_.terms = nmax_all;

    Real tolerance = bmp::pow(Real(10), -(config_.digits / 2));
    for (long m : wanted_) {
        long q = conductor / std::gcd(m, conductor);
        int wq = 1;
        for (const auto& [ell, w] : table->level_.atkin_lehner) {
            if (q % ell == 0) {
                wq *= w;
            }
        }
        Real t = 1 / (Real(m) * bmp::sqrt(Real(q)));
        long nmax = truncation_bound(t, config_.digits + 4);

        // C_r = sum over n = r mod m; then fold r and m - r, which share cosines.
        std::vector<Real> c(m);
        Real x = bmp::exp(-2 * real_pi() * t);
        Real xn = 1;
        for (long n = 1; n <= nmax; ++n) {
            xn *= x;
            if (an[n] != 0) {
                c[n % m] += Real(an[n]) / n * xn;
            }
        }
        for (long r = 1; 2 * r < m; ++r) {
            c[r] += c[m - r];
        }
        std::vector<Real> cosine(m);
        for (long k = 0; k < m; ++k) {
            cosine[k] = bmp::cos(2 * real_pi() * Real(k) / Real(m));
        }
        auto s_of = [&](long b) {
            Real s = c[0];
            for (long r = 1; 2 * r <= m; ++r) {
                s += c[r] * cosine[(r * b) % m];
            }
            return s;
        };
        // S is even in b, so tabulate b <= m/2 only.
        std::vector<Real> s_table(m / 2 + 1);
        std::vector<bool> s_done(m / 2 + 1, false);
        auto s_cached = [&](long b) -> const Real& {
            b %= m;
            if (2 * b > m) {
                b = m - b;
            }
            if (!s_done[b]) {
                s_table[b] = s_of(b);
                s_done[b] = true;
            }
            return s_table[b];
        };

        std::vector<mpq_class> row(m);
        for (long a = 0; a < m; ++a) {
            if (std::gcd(a, m) != 1) {
                continue;
            }
            if (2 * a > m && std::gcd(m - a, m) == 1) {
                row[a] = row[m - a];
                continue;
            }
            long qa = static_cast<long>((static_cast<__int128>(q % m) * a) % m);
            long b = m == 1 ? 0 : inverse_mod(qa, m);
            Real value = (s_cached(a) - wq * s_cached(b)) / table->omega_plus_;
            auto rat = reconstruct_rational(value, tolerance, config_.max_denominator);
            if (!rat) {
                throw PrecisionError("symbol " + std::to_string(a) + "/" + std::to_string(m) +
                                     " is not reconstructible at " +
                                     std::to_string(config_.digits) + " digits");
            }
            Real residual = bmp::abs(value - to_real(*rat));
            if (residual > table->record_.worst_residual) {
                table->record_.worst_residual = residual;
            }
            row[a] = *rat;
            table->denominator_bound_ = lcm(table->denominator_bound_, rat->get_den());
        }
        table->symbols_[m] = std::move(row);
    }
    return table;
}

mpq_class
modular_symbol(const tate::CurveData& e, const mpq_class& r, SymbolConfig config) {
    mpq_class rr = r;
    rr.canonicalize();
    if (!rr.get_den().fits_slong_p()) {
        throw DomainError("symbol denominator too large");
    }
    ModularSymbolBuilder builder(e, config);
    builder.require(rr.get_den().get_si());
    return builder.freeze()->symbol(rr);
}

}  // namespace excezero::mtt
