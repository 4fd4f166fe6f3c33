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

// Command-line front end: curve data, L-function values, Coleman series,
// jet derivations and the verification suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "excezero/coleman/coleman_series.hpp"
#include "excezero/errors.hpp"
#include "excezero/jets/derivations.hpp"
#include "excezero/jets/lfunction_jets.hpp"
#include "excezero/mtt/lfunction.hpp"
#include "excezero/suite/config.hpp"
#include "excezero/suite/dataset.hpp"
#include "excezero/suite/suite.hpp"
#include "excezero/tate/tate_period.hpp"

namespace {

using namespace excezero;

struct Globals {
    std::string config_path;
    std::string dataset_path;
    std::string report_path;
    bool timings = false;
    std::optional<int> precision;
    std::optional<int> level;
    std::optional<int> threads;
    std::string curve;
    long p = 0;
};

suite::RunConfig
load_config(const Globals& g) {
    suite::RunConfig c = g.config_path.empty() ? suite::RunConfig{}
                                               : suite::RunConfig::from_json_file(g.config_path);
    if (!g.dataset_path.empty()) {
        c.dataset_path = g.dataset_path;
    }
    if (!g.report_path.empty()) {
        c.report_path = g.report_path;
    }
    if (g.timings) {
        c.timings = true;
    }
    if (g.precision) {
        c.precision = *g.precision;
    }
    if (g.level) {
        c.max_level = *g.level;
    }
    if (g.threads) {
        c.threads = *g.threads;
    }
    c.validate();
    return c;
}

std::vector<tate::CurveData>
load_curves(const suite::RunConfig& c) {
    return c.dataset_path.empty() ? suite::builtin_dataset() : suite::ingest_dataset(c.dataset_path);
}

std::vector<tate::CurveData>
selection(const Globals& g, const suite::RunConfig& c) {
    auto all = load_curves(c);
    auto sel = suite::select_curves(all, g.curve, g.p);
    if (sel.empty() && (!g.curve.empty() || g.p != 0)) {
        throw LookupError("no dataset curve matches the selection");
    }
    return sel;
}

tate::CurveData
single_curve(const Globals& g, const suite::RunConfig& c) {
    if (g.curve.empty()) {
        throw ValidationError("--curve is required");
    }
    auto sel = selection(g, c);
    if (sel.size() != 1) {
        throw ValidationError("--curve " + g.curve + " matches " + std::to_string(sel.size()) +
                              " records; add --p");
    }
    return sel.front();
}

std::shared_ptr<const mtt::ModularSymbolTable>
symbols_for(const tate::CurveData& e, const suite::RunConfig& c, int level) {
    mtt::SymbolConfig sc;
    sc.digits = c.complex_digits;
    mtt::ModularSymbolBuilder b(e, sc);
    b.require_prime_powers(level);
    return b.freeze();
}

int
emit(const suite::VerificationReport& r, const suite::RunConfig& c) {
    std::cout << r.render(c.timings);
    if (!c.report_path.empty()) {
        std::ofstream f(c.report_path);
        if (!f) {
            throw ValidationError(c.report_path + ": cannot write report");
        }
        f << (c.report_path.ends_with(".json") ? r.to_json(c.timings) : r.render(c.timings));
    }
    return r.passed() ? 0 : 1;
}

}  // namespace

int
main(int argc, char** argv) {
    CLI::App app{"excezero: exceptional-zero p-adic L-function toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--dataset", g.dataset_path, "curve dataset (default: built-in table)");
    app.add_option("--report", g.report_path, "also write the report here (.json for JSON)");
    app.add_flag("--timings", g.timings, "include runtimes in reports");
    app.add_option("--precision", g.precision, "p-adic digits");
    app.add_option("--level", g.level, "Riemann-sum level");
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
    app.add_option("--curve", g.curve, "curve label");
    app.add_option("--p", g.p, "prime");
    int status = 0;

    auto* tate_cmd = app.add_subcommand("tate", "Tate period and L-invariant");
    tate_cmd->callback([&] {
        auto c = load_config(g);
        for (const auto& e : selection(g, c)) {
            auto t = tate::tate_period(e, e.p(), c.precision);
            std::cout << e.label() << " p=" << e.p() << " " << e.model_string() << "\n"
                      << "  q       = " << t.q.str() << "\n"
                      << "  ord_p q = " << t.ord_q << "\n"
                      << "  L_p     = " << t.l_invariant.str() << "\n";
        }
    });

    auto* lp_cmd = app.add_subcommand("lp", "p-adic L-function values");
    lp_cmd->require_subcommand(1);
    std::string s_text = "1";
    auto* lp_eval = lp_cmd->add_subcommand("eval", "L_p(E, s) for rational s in 1 + pZ_p");
    lp_eval->add_option("--s", s_text, "rational argument, e.g. 6 or 1/6")->capture_default_str();
    lp_eval->callback([&] {
        auto c = load_config(g);
        auto e = single_curve(g, c);
        mtt::PadicLFunction l(symbols_for(e, c, c.max_level), c.max_level, c.precision);
        mpq_class s(s_text);
        s.canonicalize();
        auto v = l.value(s);
        std::cout << "L_p(" << e.label() << ", " << s.get_str() << ") = " << v.str()
                  << "  [error tag " << l.error_tag(padic::PadicNumber::from_rational(e.p(), s, c.precision))
                  << "]\n";
    });
    auto* lp_deriv = lp_cmd->add_subcommand("deriv", "L_p'(E, 1) against L_p(E) L(E,1)/Omega^+");
    lp_deriv->callback([&] {
        auto c = load_config(g);
        auto e = single_curve(g, c);
        mtt::PadicLFunction l(symbols_for(e, c, c.max_level), c.max_level, c.precision);
        auto t = tate::tate_period(e, e.p(), c.precision);
        auto gs = mtt::greenberg_stevens_check(l, t);
        std::cout << "L_p'(" << e.label() << ", 1)       = " << gs.derivative.str() << "\n"
                  << "L_p(E) L(E,1)/Omega^+ = " << gs.predicted.str() << "\n"
                  << "L(E,1)/Omega^+        = " << gs.l_ratio.get_str() << "\n"
                  << "agreement: " << gs.relative_digits << " relative digits, error tag "
                  << gs.error_tag << "\n";
    });

    auto* col = app.add_subcommand("coleman", "Coleman power series for the x_n family");
    col->require_subcommand(1);
    int col_levels = 1;
    int col_terms = 8;
    col->add_option("--levels", col_levels, "top cyclotomic level n")->capture_default_str();
    auto coleman_args = [&](const suite::RunConfig& c) {
        if (g.p == 0) {
            throw ValidationError("--p is required");
        }
        return std::pair<long, int>(g.p, g.precision ? *g.precision : c.coleman_precision);
    };
    auto* col_build = col->add_subcommand("build", "print the leading coefficients of g");
    col_build->add_option("--terms", col_terms, "coefficients shown")->capture_default_str();
    col_build->callback([&] {
        auto [p, prec] = coleman_args(load_config(g));
        int deg = coleman::default_degree(p, prec, col_levels);
        auto gser = coleman::construct_g(p, deg, prec);
        std::cout << "g = " << gser.str(col_terms) << "\n(degree " << deg << ")\n";
    });
    auto* col_verify = col->add_subcommand("verify", "interpolation, norm and uniqueness checks");
    col_verify->callback([&] {
        auto c = load_config(g);
        auto [p, prec] = coleman_args(c);
        auto r = coleman::verify_coleman(p, prec, col_levels);
        std::cout << "log g(0) = p                : " << r.log_g0_digits << " digits\n";
        for (size_t i = 0; i < r.log_cn_digits.size(); ++i) {
            std::cout << "log g(zeta_{p^" << i + 1 << "} - 1) = x_" << i << "  : " << r.log_cn_digits[i]
                      << " digits\n";
        }
        std::cout << "C_0 = 1                     : " << r.c0_digits << " digits\n"
                  << "N(C_1) = C_0                : " << r.norm_digits << " digits\n"
                  << "Tr(x_1) = x_0               : " << r.trace_digits << " digits\n"
                  << "ord(c') l = 1               : " << r.ord_digits << " digits\n"
                  << "two constructions agree     : " << r.uniqueness_digits << " digits\n"
                  << "N(g) = g                    : " << r.norm_invariance_digits << " digits\n"
                  << (r.passed() ? "PASS" : "FAIL") << " at precision " << prec << "\n";
        status = r.passed() ? 0 : 1;
    });
    auto* col_ord = col->add_subcommand("ord-cprime", "ord(c') and its product with l");
    col_ord->callback([&] {
        auto [p, prec] = coleman_args(load_config(g));
        // two guard digits absorb the loss in the p-adic division by ord
        auto gser = coleman::construct_g(p, coleman::default_degree(p, prec + 2, 0), prec + 2);
        auto o = coleman::ord_c_prime(gser);
        std::cout << "ord(c')     = " << o.ord.str() << "\n"
                  << "l           = " << o.l_varsigma.str() << "\n"
                  << "ord(c') * l = " << o.product.str() << "  (" << o.digits << " digits of 1)\n";
    });

    auto* jets_cmd = app.add_subcommand("jets", "two-variable jets over exact scalars");
    jets_cmd->require_subcommand(1);
    std::string theorem;
    auto* jets_derive = jets_cmd->add_subcommand("derive", "run one derivation, or all");
    jets_derive->add_option("--theorem", theorem, "derivation id")
        ->check(CLI::IsMember(jets::derivation_ids()));
    jets_derive->callback([&] {
        auto ds = theorem.empty() ? jets::derive_all() : std::vector<jets::Derivation>{jets::derive(theorem)};
        for (const auto& d : ds) {
            std::cout << d.id << ": " << d.claim << "\n";
            for (const auto& s : d.steps) {
                std::cout << "  " << s.label << " = " << s.value << "\n";
            }
            std::cout << "  derived  " << d.derived.str() << "\n  expected " << d.expected.str() << "\n";
            for (const auto& k : d.constants) {
                std::cout << "  " << k.name << ": " << k.derived.str() << " vs " << k.candidate.str()
                          << (k.matches ? " (match)" : " (no match)") << "\n";
            }
            std::cout << "  " << (d.holds ? "HOLDS" : "FAILS") << "\n";
            status |= d.holds ? 0 : 1;
        }
    });
    auto* jets_table = jets_cmd->add_subcommand("table", "numeric jet scalars for a curve");
    jets_table->callback([&] {
        auto c = load_config(g);
        auto e = single_curve(g, c);
        auto t = tate::tate_period(e, e.p(), c.precision);
        auto s = jets::tate_scalars(t);
        auto one = padic::PadicNumber::one(e.p(), c.precision);
        auto jet = jets::rubin_jet(one, t, c.jet_order);
        std::cout << "ord_p q        = " << s.ord_q.str() << "\n"
                  << "1 - 1/a_p      = " << s.euler.str() << "\n"
                  << "log_p q        = " << s.log_q.str() << "\n"
                  << "L_p(E)         = " << s.l_invariant.str() << "\n"
                  << "jet (exp* = 1) = " << jet.str() << "\n"
                  << "at s = 1       = " << jet.restrict_s_one().str() << "\n";
    });

    auto* verify = app.add_subcommand("verify", "run verification checks and print a report");
    std::vector<std::string> check_names;
    std::vector<std::string> allowed{"all"};
    for (auto ch : suite::all_checks()) {
        allowed.emplace_back(suite::to_string(ch));
    }
    verify->add_option("checks", check_names, "checks to run (all, or a list)")
        ->check(CLI::IsMember(allowed));
    verify->callback([&] {
        auto c = load_config(g);
        std::vector<suite::Check> checks;
        for (const auto& n : check_names) {
            if (n == "all") {
                checks = suite::all_checks();
                break;
            }
            checks.push_back(suite::parse_check(n));
        }
        status = emit(suite::run_suite(c, selection(g, c), checks), c);
    });

    auto* ds = app.add_subcommand("dataset", "inspect the curve dataset");
    ds->require_subcommand(1);
    ds->add_subcommand("list", "list records")->callback([&] {
        auto c = load_config(g);
        for (const auto& e : load_curves(c)) {
            std::cout << e.label() << " p=" << e.p() << " sign=" << e.sign() << " " << e.model_string()
                      << "\n";
        }
    });
    ds->add_subcommand("check", "parse and test split multiplicative reduction")->callback([&] {
        auto c = load_config(g);
        auto curves = load_curves(c);
        for (const auto& e : curves) {
            auto s = tate::check_split_multiplicative(e, e.p());
            std::cout << e.label() << " p=" << e.p() << ": " << tate::to_string(s.reduction)
                      << (s.split ? "" : " (" + s.diagnostic + ")") << "\n";
            status |= s.split ? 0 : 1;
        }
        std::cout << curves.size() << " records\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
