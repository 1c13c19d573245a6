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

// Exercises the shared library through its C header only.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "cvbell/cvbell.h"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("version and errors") {
    CHECK(std::strlen(cvb_version()) > 0);
    cvb_state *s = nullptr;
    CHECK(cvb_state_scs(-1.0, 1, &s) == CVB_ERR_INVALID_ARGUMENT);
    CHECK(s == nullptr);
    CHECK(std::strlen(cvb_last_error()) > 0);
    CHECK(cvb_state_vacuum(nullptr) == CVB_ERR_INVALID_ARGUMENT);
    CHECK(cvb_state_kim(std::exp(0.6), std::exp(-0.6), 1.0 - 1e-8, &s) == CVB_ERR_DOMAIN);
    cvb_state_free(nullptr);
    cvb_two_mode_free(nullptr);
}

TEST_CASE("zero-probability herald is a domain error") {
    cvb_state *s = nullptr;
    CHECK(cvb_state_kim(1.0, 1.0, 0.9, &s) == CVB_ERR_DOMAIN);
    CHECK(s == nullptr);
}

TEST_CASE("single-mode states") {
    cvb_state *s = nullptr;
    REQUIRE(cvb_state_pure_psgs(0.7, &s) == CVB_OK);
    double w = 0;
    REQUIRE(cvb_state_quasiprob(s, CVB_WIGNER, {0, 0}, &w) == CVB_OK);
    CHECK(w == doctest::Approx(-2.0 / kPi));
    int defined = 1;
    double p = 0;
    CHECK(cvb_state_success_probability(s, &p, &defined) == CVB_OK);
    CHECK(defined == 0);
    char *text = nullptr;
    REQUIRE(cvb_state_describe(s, &text) == CVB_OK);
    CHECK(std::string(text).find("psgs") != std::string::npos);
    cvb_string_free(text);
    cvb_state_free(s);

    REQUIRE(cvb_state_lossy(0.3, 0.9, 0.6, 1.0, &s) == CVB_OK);
    CHECK(cvb_state_success_probability(s, &p, &defined) == CVB_OK);
    CHECK(defined == 1);
    CHECK(p > 0.0);
    CHECK(p < 1.0);
    cvb_state_free(s);
}

TEST_CASE("two-mode functions and Bell values") {
    cvb_state *vac = nullptr;
    REQUIRE(cvb_state_vacuum(&vac) == CVB_OK);
    cvb_two_mode *w = nullptr, *q = nullptr;
    REQUIRE(cvb_split_5050(vac, CVB_WIGNER, &w) == CVB_OK);
    REQUIRE(cvb_split_5050(vac, CVB_Q, &q) == CVB_OK);
    const double zero[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    double v = 0;
    REQUIRE(cvb_bell_evaluate(w, CVB_CHSH, zero, &v) == CVB_OK);
    CHECK(v == doctest::Approx(2.0));
    REQUIRE(cvb_bell_evaluate(q, CVB_CH, zero, &v) == CVB_OK);
    CHECK(v == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(cvb_bell_evaluate(q, CVB_CHSH, zero, &v) == CVB_ERR_INVALID_ARGUMENT);
    double m = 0;
    REQUIRE(cvb_two_mode_marginal(q, 1, {0, 0}, &m) == CVB_OK);
    CHECK(m == doctest::Approx(1.0 / kPi));
    CHECK(cvb_two_mode_marginal(q, 3, {0, 0}, &m) == CVB_ERR_INVALID_ARGUMENT);
    cvb_two_mode_free(w);
    cvb_two_mode_free(q);
    cvb_state_free(vac);

    cvb_two_mode *ecs = nullptr;
    REQUIRE(cvb_ecs_q(0.5, &ecs) == CVB_OK);
    cvb_optimizer_options o;
    cvb_optimizer_defaults(&o);
    CHECK(o.starts == 128);
    o.starts = 16;
    cvb_bell_result r;
    REQUIRE(cvb_bell_optimize(ecs, CVB_CH, &o, &r) == CVB_OK);
    CHECK(r.starts_used == 16);
    CHECK(r.violation == 1);
    REQUIRE(cvb_bell_evaluate(ecs, CVB_CH, r.argmax, &v) == CVB_OK);
    CHECK(v == doctest::Approx(r.value).epsilon(1e-12));
    cvb_two_mode_free(ecs);
}

TEST_CASE("cat approximation") {
    double f = 0, r = 0, c = 0, v = 0;
    REQUIRE(cvb_fidelity(-0.313, 1.0, &f) == CVB_OK);
    CHECK(f == doctest::Approx(0.997).epsilon(1e-3));
    REQUIRE(cvb_optimal_r(1.0, &r) == CVB_OK);
    CHECK(r < 0.0);
    REQUIRE(cvb_psgs_fock_coeff(0.0, 0, &c) == CVB_OK);
    CHECK(c == 1.0);
    REQUIRE(cvb_db_to_variance(10.0, &v) == CVB_OK);
    CHECK(v == doctest::Approx(10.0));
    CHECK(cvb_fidelity(0.0, -1.0, &f) == CVB_ERR_INVALID_ARGUMENT);

    const auto path = fs::temp_directory_path() / "cvbell_capi_fid.csv";
    REQUIRE(cvb_fidelity_curve(0.1, 0.5, 0.1, path.c_str()) == CVB_OK);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 6);
}

TEST_CASE("sweeps and figures") {
    char *names = nullptr;
    REQUIRE(cvb_figure_variants(6, &names) == CVB_OK);
    CHECK(std::string(names).find("eps0.6") != std::string::npos);
    cvb_string_free(names);
    CHECK(cvb_figure_variants(9, &names) == CVB_ERR_CONFIG);

    const auto dir = fs::temp_directory_path() / "cvbell_capi";
    fs::create_directories(dir);
    const auto cfg = dir / "run.ini";
    const auto out = dir / "run.csv";
    fs::remove(out);
    {
        std::ofstream c(cfg);
        c << "[psgs]\nstate = psgs\nfunctional = chsh\naxis = alpha\ngrid = 0.5,1.0\nstarts = 8\n";
    }
    cvb_run_options ro;
    cvb_run_defaults(&ro);
    ro.out = out.c_str();
    cvb_sweep_summary sum;
    REQUIRE(cvb_sweep_run(cfg.c_str(), &ro, &sum) == CVB_OK);
    CHECK(sum.scenarios == 1);
    CHECK(sum.rows == 2);
    CHECK(sum.violating_rows == 2);
    CHECK(fs::exists(out));

    {
        std::ofstream c(cfg);
        c << "[bad]\nstate = psgs\ngrid = 1\nwhat = 3\n";
    }
    CHECK(cvb_sweep_run(cfg.c_str(), &ro, &sum) == CVB_ERR_CONFIG);
    CHECK(cvb_sweep_run((dir / "missing.ini").c_str(), &ro, &sum) == CVB_ERR_IO);
}

TEST_CASE("oracle cross-check through the C interface") {
    char *report = nullptr;
    int ok = 0;
    REQUIRE(cvb_oracle_check(40, &report, &ok) == CVB_OK);
    CHECK(ok == 1);
    CHECK(std::string(report).find("PASS") != std::string::npos);
    cvb_string_free(report);
    CHECK(cvb_oracle_check(5, &report, &ok) == CVB_ERR_INVALID_ARGUMENT);
}
