// Copyright 2026 The cvbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end; talks to the library only through cvbell.h.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cvbell/cvbell.h"

namespace {

int exit_code(cvb_status s) {
    switch (s) {
        case CVB_OK: return 0;
        case CVB_ERR_INVALID_ARGUMENT:
        case CVB_ERR_CONFIG: return 2;
        case CVB_ERR_DOMAIN: return 3;
        case CVB_ERR_NOT_CONVERGED: return 4;
        default: return 1;
    }
}

int fail(cvb_status s) {
    std::fprintf(stderr, "cvbell: %s\n", cvb_last_error());
    return exit_code(s);
}

struct Common {
    std::optional<std::uint64_t> seed;
    int starts = 0;
    std::string out;
    int cutoff = 40;
    int jobs = 1;
};

cvb_run_options run_options(const Common &c, bool resume) {
    cvb_run_options o;
    cvb_run_defaults(&o);
    if (c.seed) {
        o.has_seed = 1;
        o.seed = *c.seed;
    }
    o.starts = c.starts;
    o.jobs = c.jobs;
    o.out = c.out.empty() ? nullptr : c.out.c_str();
    o.resume = resume;
    return o;
}

int report_summary(const cvb_sweep_summary &s) {
    std::fprintf(stderr, "cvbell: %d scenario(s), %d row(s), %d converged, %d violating\n", s.scenarios, s.rows,
                 s.converged_rows, s.violating_rows);
    if (s.rows > 0 && s.converged_rows == 0) return exit_code(CVB_ERR_NOT_CONVERGED);
    return 0;
}

struct BellArgs {
    std::string functional;
    std::string state = "psgs";
    std::optional<double> alpha, r, A, B, a_db, b_db;
    double T = 0.9;
    double epsilon = 1.0;
    double pm = 1.0;
    std::string ch_sense = "magnitude";
};

int run_bell(const BellArgs &a, const Common &c) {
    const bool chsh = a.functional == "chsh";
    cvb_status st = CVB_OK;
    cvb_state *state = nullptr;
    cvb_two_mode *two = nullptr;
    const double alpha = a.alpha.value_or(1.0);
    double A = 0.0, B = 0.0;
    if (a.A && a.B) {
        A = *a.A;
        B = *a.B;
    } else if (a.a_db && a.b_db) {
        cvb_db_to_variance(*a.a_db, &A);
        cvb_db_to_variance(*a.b_db, &B);
    } else {
        const double r = a.r.value_or(0.3);
        A = std::exp(2.0 * r);
        B = std::exp(-2.0 * r);
    }

    if (a.state == "scs" && !chsh) {
        st = cvb_ecs_q(alpha, &two);
    } else {
        if (a.state == "vacuum") {
            st = cvb_state_vacuum(&state);
        } else if (a.state == "scs") {
            st = cvb_state_scs(alpha, 1, &state);
        } else if (a.state == "psgs") {
            double r = 0.0;
            if (a.r)
                r = *a.r;
            else
                st = cvb_optimal_r(alpha, &r);
            if (st == CVB_OK) st = cvb_state_pure_psgs(r, &state);
        } else if (a.state == "kim") {
            st = cvb_state_kim(A, B, a.T, &state);
        } else if (a.state == "lossy") {
            st = cvb_state_lossy(a.r.value_or(0.3), a.T, a.epsilon, a.pm, &state);
        }
        if (st != CVB_OK) return fail(st);
        st = cvb_split_5050(state, chsh ? CVB_WIGNER : CVB_Q, &two);
    }
    if (st != CVB_OK) {
        cvb_state_free(state);
        return fail(st);
    }

    cvb_optimizer_options opts;
    cvb_optimizer_defaults(&opts);
    if (c.seed) opts.seed = *c.seed;
    if (c.starts > 0) opts.starts = c.starts;
    opts.jobs = c.jobs;
    opts.ch_sense = a.ch_sense == "upper" ? CVB_CH_UPPER : CVB_CH_MAGNITUDE;
    cvb_bell_result res;
    st = cvb_bell_optimize(two, chsh ? CVB_CHSH : CVB_CH, &opts, &res);
    if (st == CVB_OK) {
        if (chsh)
            std::printf("B_CHSH = %.12g  (maximized |B_CHSH|; violation if |B_CHSH| > 2)\n", res.value);
        else if (opts.ch_sense == CVB_CH_UPPER)
            std::printf("B_CH = %.12g  (maximized signed B_CH; violation if > 0)\n", res.value);
        else
            std::printf("B_CH = %.12g  (maximized |B_CH|; violation if B_CH < -1 or > 0)\n", res.value);
        std::printf("violation: %s\n", res.violation ? "yes" : "no");
        std::printf("z1 = (%.9g, %.9g)  z2 = (%.9g, %.9g)  z1' = (%.9g, %.9g)  z2' = (%.9g, %.9g)\n", res.argmax[0],
                    res.argmax[1], res.argmax[2], res.argmax[3], res.argmax[4], res.argmax[5], res.argmax[6],
                    res.argmax[7]);
        std::printf("starts: %d, converged: %d, winning start converged: %s\n", res.starts_used,
                    res.converged_starts, res.converged ? "yes" : "no");
        double p = 0.0;
        int defined = 0;
        if (state && cvb_state_success_probability(state, &p, &defined) == CVB_OK && defined)
            std::printf("success probability: %.12g\n", p);
    }
    cvb_two_mode_free(two);
    cvb_state_free(state);
    if (st != CVB_OK) return fail(st);
    return res.converged ? 0 : exit_code(CVB_ERR_NOT_CONVERGED);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bell-inequality numerics for continuous-variable states"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Optimizer seed")->each([&](const std::string &) { common.seed = seed; });
    app.add_option("--starts", common.starts, "Optimizer starts per evaluation")->check(CLI::PositiveNumber);
    app.add_option("--out", common.out, "Output CSV path (directory for multi-scenario configs, '-' for stdout)");
    app.add_option("--cutoff", common.cutoff, "Fock cutoff for oracle checks")->check(CLI::Range(10, 100));
    app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto *fid = app.add_subcommand("fidelity", "Best squeezed-photon approximation of an odd cat state");
    std::optional<double> fid_alpha;
    double fid_from = 0.01, fid_to = 2.5, fid_step = 0.01;
    fid->add_option("--alpha", fid_alpha, "Single amplitude; prints r_opt and F");
    fid->add_option("--from", fid_from, "First alpha of the curve");
    fid->add_option("--to", fid_to, "Last alpha of the curve");
    fid->add_option("--step", fid_step, "Curve step");

    auto *bell = app.add_subcommand("bell", "Optimize a Bell functional for one state");
    BellArgs ba;
    bell->add_option("functional", ba.functional, "chsh or ch")->required()->check(CLI::IsMember({"chsh", "ch"}));
    bell->add_option("--state", ba.state, "vacuum, psgs, scs, kim or lossy")
        ->check(CLI::IsMember({"vacuum", "psgs", "scs", "kim", "lossy"}));
    bell->add_option("--alpha", ba.alpha, "Cat amplitude (psgs uses the best r for it unless --r is given)");
    bell->add_option("--r", ba.r, "Squeezing");
    bell->add_option("--T", ba.T, "Tap transmittivity");
    bell->add_option("--epsilon", ba.epsilon, "Detector efficiency");
    bell->add_option("--pm", ba.pm, "Modal purity");
    bell->add_option("--A", ba.A, "Input variance A");
    bell->add_option("--B", ba.B, "Input variance B");
    bell->add_option("--a-db", ba.a_db, "Input variance A in dB");
    bell->add_option("--b-db", ba.b_db, "Input variance B in dB");
    bell->add_option("--ch-sense", ba.ch_sense, "magnitude or upper")
        ->check(CLI::IsMember({"magnitude", "upper"}));

    auto *sweep = app.add_subcommand("sweep", "Run the scenarios of a config file");
    std::string config;
    bool no_resume = false;
    sweep->add_option("config", config, "Scenario file")->required();
    sweep->add_flag("--no-resume", no_resume, "Recompute rows already present in the output");

    auto *fig = app.add_subcommand("fig", "Regenerate the data of a figure");
    int fig_n = 1;
    std::string fig_variant;
    bool fig_list = false;
    fig->add_option("n", fig_n, "Figure number 1..7")->required();
    fig->add_option("variant", fig_variant, "Panel / curve");
    fig->add_flag("--list", fig_list, "List the variants");
    fig->add_flag("--no-resume", no_resume, "Recompute rows already present in the output");

    auto *oracle = app.add_subcommand("oracle", "Fock-space cross-checks");
    std::string oracle_cmd;
    oracle->add_option("command", oracle_cmd, "check")->required()->check(CLI::IsMember({"check"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (*fid) {
        if (fid_alpha) {
            double r = 0.0, f = 0.0;
            cvb_status st = cvb_optimal_r(*fid_alpha, &r);
            if (st == CVB_OK) st = cvb_fidelity(r, *fid_alpha, &f);
            if (st != CVB_OK) return fail(st);
            std::printf("alpha = %.12g  r_opt = %.12g  F = %.12g\n", *fid_alpha, r, f);
            return 0;
        }
        const cvb_status st = cvb_fidelity_curve(fid_from, fid_to, fid_step, common.out.empty() ? "-" : common.out.c_str());
        return st == CVB_OK ? 0 : fail(st);
    }
    if (*bell) return run_bell(ba, common);
    if (*sweep) {
        const auto o = run_options(common, !no_resume);
        cvb_sweep_summary s;
        const cvb_status st = cvb_sweep_run(config.c_str(), &o, &s);
        if (st != CVB_OK) return fail(st);
        return report_summary(s);
    }
    if (*fig) {
        if (fig_list) {
            char *v = nullptr;
            const cvb_status st = cvb_figure_variants(fig_n, &v);
            if (st != CVB_OK) return fail(st);
            std::printf("%s\n", *v ? v : "(no variants)");
            cvb_string_free(v);
            return 0;
        }
        const auto o = run_options(common, !no_resume);
        cvb_sweep_summary s;
        const cvb_status st = cvb_figure_run(fig_n, fig_variant.c_str(), &o, &s);
        if (st != CVB_OK) return fail(st);
        return report_summary(s);
    }
    if (*oracle) {
        char *report = nullptr;
        int ok = 0;
        const cvb_status st = cvb_oracle_check(common.cutoff, &report, &ok);
        if (st != CVB_OK) return fail(st);
        std::fputs(report, stdout);
        cvb_string_free(report);
        std::printf("%s\n", ok ? "all checks passed" : "some checks FAILED");
        return ok ? 0 : 1;
    }
    return 0;
}
