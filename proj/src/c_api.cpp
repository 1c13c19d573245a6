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

#include "cvbell/cvbell.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "cvbell/bell.hpp"
#include "cvbell/error.hpp"
#include "cvbell/fidelity.hpp"
#include "cvbell/oracle_check.hpp"
#include "cvbell/state_model.hpp"
#include "cvbell/sweep.hpp"
#include "cvbell/two_mode.hpp"

struct cvb_state {
    cvbell::StateModel model;
    cvbell::SingleModeState state;
};

struct cvb_two_mode {
    cvbell::TwoModeQuasiprob two;
};

namespace {

thread_local std::string g_last_error;

cvb_status status_of(cvbell::ErrorKind k) {
    switch (k) {
        case cvbell::ErrorKind::InvalidArgument: return CVB_ERR_INVALID_ARGUMENT;
        case cvbell::ErrorKind::Config: return CVB_ERR_CONFIG;
        case cvbell::ErrorKind::Domain: return CVB_ERR_DOMAIN;
        case cvbell::ErrorKind::NotConverged: return CVB_ERR_NOT_CONVERGED;
        case cvbell::ErrorKind::Io: return CVB_ERR_IO;
    }
    return CVB_ERR_INTERNAL;
}

template <class F>
cvb_status guarded(F &&f) {
    try {
        g_last_error.clear();
        f();
        return CVB_OK;
    } catch (const cvbell::Error &e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return CVB_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return CVB_ERR_INTERNAL;
    }
}

template <class T>
void need(const T *p, const char *what) {
    if (!p) throw cvbell::InvalidArgument(std::string(what) + " must not be NULL");
}

char *dup_string(const std::string &s) {
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class Build>
cvb_status make_state(Build build, cvb_state **out) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        cvbell::StateModel m = build();
        auto st = cvbell::SingleModeState::from_model(m);
        *out = new cvb_state{std::move(m), std::move(st)};
    });
}

cvbell::Ordering ordering_of(cvb_ordering j) {
    if (j == CVB_WIGNER) return cvbell::Ordering::Wigner;
    if (j == CVB_Q) return cvbell::Ordering::Q;
    throw cvbell::InvalidArgument("unknown ordering");
}

cvbell::Functional functional_of(cvb_functional f) {
    if (f == CVB_CHSH) return cvbell::Functional::Chsh;
    if (f == CVB_CH) return cvbell::Functional::Ch;
    throw cvbell::InvalidArgument("unknown functional");
}

cvbell::OptimizerOptions options_of(const cvb_optimizer_options *o) {
    cvbell::OptimizerOptions opts;
    if (!o) return opts;
    opts.starts = o->starts;
    opts.seed = o->seed;
    opts.box = o->box;
    opts.tol = o->tol;
    opts.jobs = o->jobs;
    opts.ch_sense = o->ch_sense == CVB_CH_UPPER ? cvbell::ChSense::Upper : cvbell::ChSense::Magnitude;
    return opts;
}

cvbell::PhasePoint pt(cvb_point p) { return {p.re, p.im}; }

void run_scenarios(std::vector<cvbell::Scenario> scenarios, const cvb_run_options *o, cvb_sweep_summary *summary) {
    cvb_run_options defaults;
    cvb_run_defaults(&defaults);
    if (!o) o = &defaults;
    cvb_sweep_summary sum{};
    for (auto &s : scenarios) {
        if (o->has_seed) s.optimizer.seed = o->seed;
        if (o->starts > 0) s.optimizer.starts = o->starts;
        bool to_stdout = false;
        if (o->out && std::strcmp(o->out, "-") == 0) {
            to_stdout = true;
            s.output.clear();
        } else if (o->out && *o->out) {
            s.output = scenarios.size() == 1 ? std::string(o->out) : std::string(o->out) + "/" + s.name + ".csv";
        }
        if (s.output.empty()) to_stdout = true;

        cvbell::RunOptions ro;
        ro.jobs = std::max(1, o->jobs);
        ro.resume = o->resume != 0;
        if (to_stdout) {
            std::printf("%s\n", cvbell::csv_header(s.quantity).c_str());
            ro.on_row = [q = s.quantity](const cvbell::SweepRow &r) {
                std::printf("%s\n", cvbell::csv_line(r, q).c_str());
                std::fflush(stdout);
            };
        }
        const auto rows = cvbell::run_scenario(s, ro);
        ++sum.scenarios;
        for (const auto &r : rows) {
            ++sum.rows;
            if (r.converged) ++sum.converged_rows;
            if (s.quantity != cvbell::Quantity::Fidelity &&
                cvbell::violates(s.quantity == cvbell::Quantity::Chsh ? cvbell::Functional::Chsh
                                                                        : cvbell::Functional::Ch,
                                 r.bell))
                ++sum.violating_rows;
        }
    }
    if (summary) *summary = sum;
}

}  // namespace

extern "C" {

CVB_API const char *cvb_version(void) { return "0.1.0"; }

CVB_API const char *cvb_last_error(void) { return g_last_error.c_str(); }

CVB_API void cvb_string_free(char *s) { std::free(s); }

CVB_API void cvb_optimizer_defaults(cvb_optimizer_options *opts) {
    if (!opts) return;
    const cvbell::OptimizerOptions d;
    opts->starts = d.starts;
    opts->seed = d.seed;
    opts->box = d.box;
    opts->tol = d.tol;
    opts->jobs = d.jobs;
    opts->ch_sense = CVB_CH_MAGNITUDE;
}

CVB_API void cvb_run_defaults(cvb_run_options *opts) {
    if (!opts) return;
    opts->has_seed = 0;
    opts->seed = 1;
    opts->starts = 0;
    opts->jobs = 1;
    opts->out = nullptr;
    opts->resume = 1;
}

CVB_API cvb_status cvb_state_vacuum(cvb_state **out) { return make_state([] { return cvbell::model::Vacuum{}; }, out); }

CVB_API cvb_status cvb_state_scs(double alpha, int odd, cvb_state **out) {
    return make_state([&] { return cvbell::model::Scs{alpha, odd ? cvbell::Parity::Odd : cvbell::Parity::Even}; },
                      out);
}

CVB_API cvb_status cvb_state_pure_psgs(double r, cvb_state **out) {
    return make_state([&] { return cvbell::model::PurePsgs{r}; }, out);
}

CVB_API cvb_status cvb_state_gaussian(double A, double B, cvb_state **out) {
    return make_state([&] { return cvbell::model::Gaussian{{A, B}}; }, out);
}

CVB_API cvb_status cvb_state_kim(double A, double B, double T, cvb_state **out) {
    return make_state([&] { return cvbell::model::KimConditional{{A, B}, T}; }, out);
}

CVB_API cvb_status cvb_state_lossy(double r, double T, double epsilon, double pm, cvb_state **out) {
    return make_state(
        [&]() -> cvbell::StateModel {
            if (pm == 1.0) return cvbell::model::LossyPsgs{r, T, epsilon};
            return cvbell::lossy_with_dark_counts(r, T, epsilon, pm);
        },
        out);
}

CVB_API void cvb_state_free(cvb_state *s) { delete s; }

CVB_API cvb_status cvb_state_quasiprob(const cvb_state *s, cvb_ordering j, cvb_point z, double *out) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        *out = s->state.quasiprob(ordering_of(j), pt(z));
    });
}

CVB_API cvb_status cvb_state_success_probability(const cvb_state *s, double *out, int *defined) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        need(defined, "defined");
        const auto p = cvbell::success_probability(s->model);
        *defined = p.has_value();
        *out = p.value_or(0.0);
    });
}

CVB_API cvb_status cvb_state_describe(const cvb_state *s, char **out) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        *out = dup_string(s->model.describe());
    });
}

CVB_API cvb_status cvb_split_5050(const cvb_state *s, cvb_ordering j, cvb_two_mode **out) {
    return guarded([&] {
        need(s, "state");
        need(out, "out");
        *out = nullptr;
        *out = new cvb_two_mode{cvbell::split_5050(s->state, ordering_of(j))};
    });
}

CVB_API cvb_status cvb_ecs_q(double alpha, cvb_two_mode **out) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        *out = new cvb_two_mode{cvbell::make_q_ecs(alpha)};
    });
}

CVB_API void cvb_two_mode_free(cvb_two_mode *t) { delete t; }

CVB_API cvb_status cvb_two_mode_eval(const cvb_two_mode *t, cvb_point z1, cvb_point z2, double *out) {
    return guarded([&] {
        need(t, "two_mode");
        need(out, "out");
        *out = t->two(pt(z1), pt(z2));
    });
}

CVB_API cvb_status cvb_two_mode_marginal(const cvb_two_mode *t, int mode, cvb_point z, double *out) {
    return guarded([&] {
        need(t, "two_mode");
        need(out, "out");
        *out = cvbell::marginal(t->two, mode, pt(z));
    });
}

CVB_API cvb_status cvb_bell_evaluate(const cvb_two_mode *t, cvb_functional f, const double settings[8], double *out) {
    return guarded([&] {
        need(t, "two_mode");
        need(settings, "settings");
        need(out, "out");
        std::array<double, 8> x;
        std::copy(settings, settings + 8, x.begin());
        const auto d = cvbell::DisplacementSet::from_array(x);
        *out = functional_of(f) == cvbell::Functional::Chsh ? cvbell::bell_chsh(t->two, d)
                                                            : cvbell::bell_ch(t->two, d);
    });
}

CVB_API cvb_status cvb_bell_optimize(const cvb_two_mode *t, cvb_functional f, const cvb_optimizer_options *opts,
                                     cvb_bell_result *out) {
    return guarded([&] {
        need(t, "two_mode");
        need(out, "out");
        const auto fn = functional_of(f);
        const auto r = cvbell::optimize(fn, t->two, options_of(opts));
        out->value = r.value;
        const auto x = r.argmax.to_array();
        std::copy(x.begin(), x.end(), out->argmax);
        out->starts_used = r.starts_used;
        out->converged_starts = r.converged_starts;
        out->converged = r.converged;
        out->violation = cvbell::violates(fn, r.value);
    });
}

CVB_API cvb_status cvb_fidelity(double r, double alpha, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = cvbell::fidelity(r, alpha);
    });
}

CVB_API cvb_status cvb_optimal_r(double alpha, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = cvbell::optimal_r(alpha);
    });
}

CVB_API cvb_status cvb_psgs_fock_coeff(double r, int n, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = cvbell::psgs_fock_coeff(r, n);
    });
}

CVB_API cvb_status cvb_db_to_variance(double db, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = cvbell::db_to_variance(db);
    });
}

CVB_API cvb_status cvb_fidelity_curve(double from, double to, double step, const char *out_path) {
    return guarded([&] {
        cvbell::Scenario s;
        s.name = "fidelity";
        s.family = cvbell::Family::Psgs;
        s.quantity = cvbell::Quantity::Fidelity;
        s.axis = cvbell::SweepAxis::Alpha;
        s.grid = cvbell::parse_grid(cvbell::format_number(from) + ":" + cvbell::format_number(to) + ":" +
                                    cvbell::format_number(step));
        s.output = out_path && std::strcmp(out_path, "-") != 0 ? out_path : "";
        cvb_run_options o;
        cvb_run_defaults(&o);
        o.resume = 0;
        run_scenarios({s}, &o, nullptr);
    });
}

CVB_API cvb_status cvb_sweep_run(const char *config_path, const cvb_run_options *opts, cvb_sweep_summary *summary) {
    return guarded([&] {
        need(config_path, "config_path");
        run_scenarios(cvbell::load_config(config_path), opts, summary);
    });
}

CVB_API cvb_status cvb_figure_run(int n, const char *variant, const cvb_run_options *opts,
                                  cvb_sweep_summary *summary) {
    return guarded([&] { run_scenarios({cvbell::figure(n, variant ? variant : "")}, opts, summary); });
}

CVB_API cvb_status cvb_figure_variants(int n, char **out) {
    return guarded([&] {
        need(out, "out");
        std::string s;
        for (const auto &v : cvbell::figure_variants(n)) s += (s.empty() ? "" : ",") + v;
        *out = dup_string(s);
    });
}

CVB_API cvb_status cvb_oracle_check(int cutoff, char **report, int *all_passed) {
    return guarded([&] {
        need(report, "report");
        need(all_passed, "all_passed");
        const auto checks = cvbell::run_oracle_suite(cutoff);
        bool ok = true;
        for (const auto &c : checks) ok = ok && c.passed;
        *all_passed = ok;
        *report = dup_string(cvbell::format_oracle_table(checks));
    });
}

}  // extern "C"
