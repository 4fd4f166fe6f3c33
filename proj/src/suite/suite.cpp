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

#include "excezero/suite/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <thread>

#include "excezero/coleman/coleman_series.hpp"
#include "excezero/coleman/local_hom.hpp"
#include "excezero/errors.hpp"
#include "excezero/jets/derivations.hpp"
#include "excezero/mtt/interpolation.hpp"
#include "excezero/mtt/lfunction.hpp"
#include "excezero/mtt/periods.hpp"
#include "excezero/tate/tate_period.hpp"

namespace excezero::suite {

using padic::PadicNumber;

const char*
to_string(Check c) {
    switch (c) {
        case Check::trivial_zero:
            return "trivial-zero";
        case Check::gs:
            return "gs";
        case Check::interp:
            return "interp";
        case Check::funceq:
            return "funceq";
        case Check::coleman:
            return "coleman";
        case Check::derivative_model:
            return "derivative-model";
        case Check::jets:
            return "jets";
    }
    return "?";
}

Check
parse_check(const std::string& name) {
    for (Check c : all_checks()) {
        if (name == to_string(c)) {
            return c;
        }
    }
    throw ValidationError("unknown check '" + name + "'");
}

const std::vector<Check>&
all_checks() {
    static const std::vector<Check> all{Check::trivial_zero, Check::gs,      Check::interp,
                                        Check::funceq,       Check::coleman, Check::derivative_model,
                                        Check::jets};
    return all;
}

namespace {

bool
selected(const std::vector<Check>& checks, Check c) {
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

CheckRecord
numeric(std::string check, std::string subject, std::string anchor, const std::string& left,
        const std::string& right, int digits, int threshold) {
    CheckRecord r;
    r.check = std::move(check);
    r.subject = std::move(subject);
    r.anchor = std::move(anchor);
    r.left = left;
    r.right = right;
    r.digits = digits;
    r.threshold = threshold;
    r.verdict = digits >= threshold ? Verdict::pass : Verdict::fail;
    return r;
}

CheckRecord
exact(std::string check, std::string subject, std::string anchor, const std::string& left,
      const std::string& right, bool holds) {
    CheckRecord r;
    r.check = std::move(check);
    r.subject = std::move(subject);
    r.anchor = std::move(anchor);
    r.left = left;
    r.right = right;
    r.verdict = holds ? Verdict::pass : Verdict::fail;
    return r;
}

// Runs body, timing it and turning exceptions into an error record.
void
guarded(std::vector<CheckRecord>& out, const std::string& check, const std::string& subject,
        const std::string& anchor, const std::function<void(std::vector<CheckRecord>&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckRecord> recs;
    try {
        body(recs);
    } catch (const std::exception& e) {
        CheckRecord r;
        r.check = check;
        r.subject = subject;
        r.anchor = anchor;
        r.verdict = Verdict::error;
        r.detail = e.what();
        recs = {r};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& r : recs) {
        r.seconds = s / static_cast<double>(recs.size());
        out.push_back(std::move(r));
    }
}

// L(E,1)/Omega^+ from the analytic series and the AGM period, independent of
// the modular-symbol tables.
mpq_class
analytic_l_ratio(const tate::CurveData& e) {
    auto lv = mtt::level_data(e);
    auto an = tate::an_table(e, 4000);
    mtt::Real ratio = mtt::l_value_at_one(e, lv, an) / mtt::real_period(e);
    auto r = mtt::reconstruct_rational(ratio, mtt::Real("1e-40"), 100000);
    if (!r) {
        throw PrecisionError("L(E,1)/Omega^+ is not a small rational");
    }
    return *r;
}

const char* const kTrivialZero = "L_p(E, s) = 0 at s = 1 (exact)";
const char* const kGs = "L_p'(E, 1) = L_p(E) * L(E,1)/Omega^+";
const char* const kInterp = "sum_a chi(a) mu(a + p^(m+1) Z_p) = tau(chi) L(E, chi^-1, 1)/Omega^+";
const char* const kFunceq = "<N>^(s/2) L_p(s) = -sign <N>^((2-s)/2) L_p(2-s) at s = 1 + p";
const char* const kDerivModel = "l^-1 z(p^-1) = L_p(E) exp*(z) l^-1 for z(q) = 0";

std::vector<CheckRecord>
curve_checks(const RunConfig& cfg, const tate::CurveData& e, const std::vector<Check>& checks) {
    std::vector<CheckRecord> out;
    const long p = e.p();
    const std::string subj = e.label() + " p=" + std::to_string(p);
    std::shared_ptr<const mtt::ModularSymbolTable> table;
    auto symbols = [&]() {
        if (!table) {
            mtt::SymbolConfig sc;
            sc.digits = cfg.complex_digits;
            mtt::ModularSymbolBuilder b(e, sc);
            b.require_prime_powers(cfg.max_level);
            table = b.freeze();
        }
        return table;
    };
    std::unique_ptr<tate::TateParameter> tp;
    auto tate_param = [&]() -> const tate::TateParameter& {
        if (!tp) {
            tp = std::make_unique<tate::TateParameter>(tate::tate_period(e, p, cfg.precision));
        }
        return *tp;
    };

    for (Check c : checks) {
        switch (c) {
            case Check::trivial_zero:
                guarded(out, to_string(c), subj, kTrivialZero, [&](auto& recs) {
                    std::string left;
                    bool all = true;
                    for (int nu = 1; nu <= cfg.max_level; ++nu) {
                        mtt::PadicLFunction l(symbols(), nu, cfg.precision);
                        PadicNumber v = mtt::lp_value(l, mpq_class(1));
                        all = all && v.is_exact_zero();
                        left += (nu > 1 ? ", " : "") + std::string("level ") + std::to_string(nu) +
                                ": " + v.str();
                    }
                    recs.push_back(exact(to_string(c), subj, kTrivialZero, left, "0", all));
                });
                break;
            case Check::gs:
                guarded(out, to_string(c), subj, kGs, [&](auto& recs) {
                    mtt::PadicLFunction l(symbols(), cfg.max_level, cfg.precision);
                    const auto& t = tate_param();
                    mpq_class ratio = analytic_l_ratio(e);
                    if (ratio == 0) {
                        throw DomainError("L(E,1) = 0: the formula is stated for rank 0");
                    }
                    PadicNumber predicted =
                        t.l_invariant * PadicNumber::from_rational(p, ratio, cfg.precision + 2);
                    PadicNumber d = mtt::lp_derivative_at_1(l);
                    int digits = padic::relative_agreement(d, predicted);
                    auto r = numeric(to_string(c), subj, kGs, d.str(), predicted.str(), digits, 2);
                    mpq_class symbol_ratio = l.symbols().symbol(0, 1);
                    r.detail = "level " + std::to_string(cfg.max_level) + ", L(E,1)/Omega^+ = " +
                               ratio.get_str() + " (series), [0]^+ = " + symbol_ratio.get_str() +
                               ", error tag " + std::to_string(l.derivative_error_tag()) +
                               ", absolute digits " +
                               std::to_string(padic::agreement(d, predicted));
                    if (symbol_ratio != ratio) {
                        r.verdict = Verdict::fail;
                        r.detail += "; the two routes to L(E,1)/Omega^+ disagree";
                    }
                    recs.push_back(std::move(r));
                });
                break;
            case Check::interp:
                if (p > cfg.interp_max_prime) {
                    break;
                }
                guarded(out, to_string(c), subj, kInterp, [&](auto& recs) {
                    padic::PadicCharacter chi(p, 1, 1);
                    mtt::SymbolConfig sc;
                    sc.digits = cfg.complex_digits;
                    auto rep = mtt::interpolation_check(*symbols(), chi, cfg.precision, sc);
                    auto r = numeric(to_string(c), subj, kInterp, rep.measure_side.str(),
                                     rep.complex_side.str(), rep.digits_agree, 3);
                    r.detail = "character of order p, conductor p^2, 1 + p -> zeta_p";
                    recs.push_back(std::move(r));
                });
                break;
            case Check::funceq:
                guarded(out, to_string(c), subj, kFunceq, [&](auto& recs) {
                    if (e.sign() == 0) {
                        throw ValidationError("no sign recorded for " + e.label());
                    }
                    mtt::PadicLFunction l(symbols(), cfg.max_level, cfg.precision);
                    auto fe = mtt::functional_equation_check(l, mpq_class(1 + p), e.sign());
                    auto r = numeric(to_string(c), subj, kFunceq, fe.lhs.str(), fe.rhs.str(),
                                     fe.residual_valuation, fe.error_tag);
                    r.verdict = fe.within_tag ? Verdict::pass : Verdict::fail;
                    r.detail = "sign " + std::to_string(e.sign()) + ", residual " + fe.residual.str();
                    recs.push_back(std::move(r));
                });
                break;
            case Check::derivative_model:
                guarded(out, to_string(c), subj, kDerivModel, [&](auto& recs) {
                    const auto& t = tate_param();
                    auto base = coleman::LocalHomClass::branch_log(t, cfg.precision + 2);
                    std::mt19937_64 rng(static_cast<uint64_t>(p) * 1000003u + 17u);
                    bool all = true;
                    int worst = cfg.precision;
                    coleman::DerivativeModel first;
                    const int sweep = 12;
                    for (int i = 0; i < sweep; ++i) {
                        mpz_class a = i < 4 ? mpz_class(i + 1) : mpz_class(static_cast<long>(rng() % 1000000));
                        int shift = i >= 4 ? static_cast<int>(rng() % 3) : 0;
                        PadicNumber alpha = PadicNumber::from_parts(p, shift, a, cfg.precision);
                        auto m = coleman::coleman_derivative_model(base.scaled(alpha), t);
                        all = all && m.equal();
                        worst = std::min(worst, m.digits);
                        if (i == 0) {
                            first = m;
                        }
                    }
                    auto r = exact(to_string(c), subj, kDerivModel, first.from_value.str(),
                                   first.from_dual_exp.str(), all);
                    r.detail = std::to_string(sweep) + " values of alpha, z = alpha log_q; least agreement " +
                               std::to_string(worst) + " digits; log_p and ord_p rejected";
                    bool rejected = false;
                    try {
                        coleman::coleman_derivative_model(coleman::LocalHomClass::log_p(p, cfg.precision), t);
                    } catch (const DomainError&) {
                        rejected = true;
                    }
                    if (!rejected) {
                        r.verdict = Verdict::fail;
                        r.detail += "; log_p was not rejected";
                    }
                    recs.push_back(std::move(r));
                });
                break;
            case Check::coleman:
            case Check::jets:
                break;
        }
    }
    return out;
}

std::vector<CheckRecord>
coleman_checks(const RunConfig& cfg, long p) {
    std::vector<CheckRecord> out;
    const std::string subj = "p=" + std::to_string(p);
    const char* anchor = "log g(0) = p; log g(zeta_{p^(n+1)} - 1) = x_n; N(C_1) = C_0 = 1; ord(c') l = 1";
    guarded(out, "coleman", subj, anchor, [&](auto& recs) {
        auto r = coleman::verify_coleman(p, cfg.coleman_precision, cfg.coleman_levels);
        const int n = cfg.coleman_precision;
        auto add = [&](const std::string& what, const std::string& left, const std::string& right,
                       int digits) {
            recs.push_back(numeric("coleman", subj, what, left, right, digits, n));
        };
        add("log_p g(0) = p", "log_p g(0)", std::to_string(p), r.log_g0_digits);
        for (size_t i = 0; i < r.log_cn_digits.size(); ++i) {
            std::string k = std::to_string(i + 1);
            add("log_p g(zeta_{p^" + k + "} - 1) = x_" + std::to_string(i), "log_p C_" + std::to_string(i),
                "x_" + std::to_string(i), r.log_cn_digits[i]);
        }
        add("C_0 = g(0 at zeta_p - 1) = 1", "C_0", "1", r.c0_digits);
        add("N_{1,0}(C_1) = C_0", "N(C_1)", "C_0", r.norm_digits);
        add("Tr_{1,0}(x_1) = x_0", "Tr(x_1)", "x_0", r.trace_digits);
        add("ord(c') * log_p(1+p)(1 - 1/p) = 1", r.ord.product.str(), "1", r.ord_digits);
        add("closed form = conjugate sum", "g (closed form)", "g (conjugate sum)", r.uniqueness_digits);
        add("N(g) = g in low degree", "N(g)", "g", r.norm_invariance_digits);
        recs.back().detail = "degree " + std::to_string(r.degree) + ", ord(c') = " + r.ord.ord.str();
    });
    return out;
}

std::vector<CheckRecord>
jet_checks() {
    std::vector<CheckRecord> out;
    for (const auto& id : jets::derivation_ids()) {
        guarded(out, "jets", id, id, [&](auto& recs) {
            auto d = jets::derive(id);
            auto r = exact("jets", id, d.claim, d.derived.str(), d.expected.str(), d.holds);
            for (const auto& k : d.constants) {
                r.detail += (r.detail.empty() ? "" : "; ") + k.name + (k.matches ? " holds" : " does not hold");
            }
            recs.push_back(std::move(r));
        });
    }
    return out;
}

}  // namespace

VerificationReport
run_suite(const RunConfig& config, const std::vector<tate::CurveData>& curves,
          const std::vector<Check>& checks, long coleman_max_prime) {
    config.validate();
    VerificationReport report;
    if (checks.empty()) {
        return report;
    }
    const bool per_curve = selected(checks, Check::trivial_zero) || selected(checks, Check::gs) ||
                           selected(checks, Check::interp) || selected(checks, Check::funceq) ||
                           selected(checks, Check::derivative_model);
    if (per_curve || selected(checks, Check::coleman)) {
        for (const auto& e : curves) {
            auto s = tate::check_split_multiplicative(e, e.p());
            if (!s.split) {
                throw ValidationError(e.label() + " at p = " + std::to_string(e.p()) + ": " + s.diagnostic);
            }
        }
    }

    // curve checks, then Coleman primes, run as independent tasks
    std::vector<std::function<std::vector<CheckRecord>()>> tasks;
    if (per_curve) {
        for (const auto& e : curves) {
            tasks.push_back([&config, e, &checks] { return curve_checks(config, e, checks); });
        }
    }
    if (selected(checks, Check::coleman)) {
        std::set<long> primes;
        for (const auto& e : curves) {
            if (e.p() <= coleman_max_prime) {
                primes.insert(e.p());
            }
        }
        for (long p : primes) {
            tasks.push_back([&config, p] { return coleman_checks(config, p); });
        }
    }
    unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<CheckRecord>> results(tasks.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<size_t>(workers, tasks.size()); ++w) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < tasks.size(); i = next++) {
                results[i] = tasks[i]();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& r : results) {
        report.records.insert(report.records.end(), r.begin(), r.end());
    }
    if (selected(checks, Check::jets)) {
        auto j = jet_checks();
        report.records.insert(report.records.end(), j.begin(), j.end());
    }
    return report;
}

}  // namespace excezero::suite
