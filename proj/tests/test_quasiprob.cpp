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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "cvbell/error.hpp"
#include "cvbell/fock.hpp"
#include "cvbell/quasiprob.hpp"
#include "cvbell/state_model.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cvbell;

namespace {

const std::vector<PhasePoint> kGrid = [] {
    std::vector<PhasePoint> g;
    for (double x : {-1.2, -0.4, 0.0, 0.35, 1.1})
        for (double y : {-0.9, 0.0, 0.5, 1.3}) g.push_back({x, y});
    return g;
}();

// Wigner variances (z_r, z_i) of the Gaussian with characteristic variances (A, B).
oracle::Heralded kim_oracle(GaussianVariances v, double T) { return oracle::herald_gaussian(v.B / 4, v.A / 4, T, 1.0); }
oracle::Heralded lossy_oracle(double r, double T, double eps) {
    return oracle::herald_gaussian(std::exp(2 * r) / 4, std::exp(-2 * r) / 4, T, eps);
}

std::vector<StateModel> all_families() {
    return {model::Vacuum{},
            model::Scs{1.0, Parity::Odd},
            model::Scs{0.8, Parity::Even},
            model::PurePsgs{0.3},
            model::PurePsgs{-0.25},
            model::Gaussian{GaussianVariances{2.0, 0.7}},
            model::KimConditional{GaussianVariances::squeezed_vacuum(0.3), 0.9},
            model::KimConditional{GaussianVariances::from_db(2.65, -2.56), 0.8},
            model::LossyPsgs{0.3, 0.95, 0.6},
            lossy_with_dark_counts(0.3, 0.99, 0.6, 0.8)};
}

}  // namespace

TEST_CASE("dB conversion") {
    CHECK(db_to_variance(0.0) == 1.0);
    CHECK(db_to_variance(10.0) == doctest::Approx(10.0));
    CHECK(db_to_variance(-3.0) == doctest::Approx(0.501187).epsilon(1e-6));
    const auto v = GaussianVariances::from_db(2.65, -2.56);
    CHECK(v.product() > 1.0);
    CHECK_THROWS_AS(GaussianVariances({0.5, 1.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(GaussianVariances({-1.0, -2.0}).validate(), InvalidArgument);
}

TEST_CASE("vacuum quasiprobabilities") {
    CHECK(wigner_vacuum({0, 0}) == doctest::Approx(2.0 / kPi));
    CHECK(q_vacuum({0, 0}) == doctest::Approx(1.0 / kPi));
    CHECK(oracle::simpson_plane([](double x, double y) { return wigner_vacuum({x, y}); }) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("squeezed single photon characteristic function") {
    CHECK(char_pure_psgs(0.0, {0, 0}) == doctest::Approx(1.0));
    CHECK(char_pure_psgs(0.0, {1, 0}) == doctest::Approx(0.0));
    const auto rho = fock::build_state(model::PurePsgs{0.3});
    for (PhasePoint eta : {PhasePoint{0.5, 0.5}, PhasePoint{-0.3, 1.1}, PhasePoint{1.4, 0.0}}) {
        const auto ref = fock::characteristic(rho, eta);
        CHECK(char_pure_psgs(0.3, eta) == doctest::Approx(ref.real()).epsilon(1e-10));
        CHECK(std::abs(ref.imag()) < 1e-10);
        CHECK(characteristic_pure_psgs(0.3)(eta) == doctest::Approx(char_pure_psgs(0.3, eta)).epsilon(1e-13));
    }
}

TEST_CASE("squeezed single photon Wigner function") {
    CHECK(wigner_pure_psgs(0.7, {0, 0}) == doctest::Approx(-2.0 / kPi));
    CHECK(wigner_pure_psgs(0.0, {0.5, 0}) == doctest::Approx(0.0).epsilon(1e-15));
    const auto rho = fock::build_state(model::PurePsgs{0.3});
    for (auto z : kGrid) {
        CHECK(wigner_pure_psgs(0.3, z) == doctest::Approx(fock::wigner(rho, z)).epsilon(1e-10));
        // Atom path agrees with the literal formula and a numeric Fourier transform.
        const auto w = to_quasiprob(characteristic_pure_psgs(0.3), Ordering::Wigner);
        CHECK(w(z) == doctest::Approx(wigner_pure_psgs(0.3, z)).epsilon(1e-12));
    }
    const double ft = oracle::fourier_quasiprob([](double x, double y) { return char_pure_psgs(0.3, {x, y}); }, 0,
                                                0.35, -0.9);
    CHECK(wigner_pure_psgs(0.3, {0.35, -0.9}) == doctest::Approx(ft).epsilon(1e-9));
}

TEST_CASE("cat state quasiprobabilities") {
    CHECK(wigner_scs(1.0, Parity::Odd, {0, 0}) == doctest::Approx(-2.0 / kPi));
    for (auto z : kGrid)
        CHECK(wigner_scs(1e-4, Parity::Even, z) == doctest::Approx(wigner_vacuum(z)).epsilon(1e-6));
    const auto odd = fock::build_state(model::Scs{1.0, Parity::Odd});
    const auto even = fock::build_state(model::Scs{0.8, Parity::Even});
    for (auto z : kGrid) {
        CHECK(wigner_scs(1.0, Parity::Odd, z) == doctest::Approx(fock::wigner(odd, z)).epsilon(1e-10));
        CHECK(q_scs(1.0, Parity::Odd, z) == doctest::Approx(fock::husimi(odd, z)).epsilon(1e-10));
        CHECK(wigner_scs(0.8, Parity::Even, z) == doctest::Approx(fock::wigner(even, z)).epsilon(1e-10));
    }
    // A decohered cat interpolates between the pure cat and the mixture.
    const CatState mixed{1.0, Parity::Odd, 0.0};
    // (|a><a| + |-a><-a|) / 2 with a = 1
    const double expect = 0.5 * (wigner_vacuum(PhasePoint{0.7, 0.2} - PhasePoint{1.0, 0.0}) +
                                 wigner_vacuum(PhasePoint{0.7, 0.2} + PhasePoint{1.0, 0.0}));
    CHECK(mixed.quasiprob(Ordering::Wigner, {0.7, 0.2}) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("correlation matrix of the tap beam splitter") {
    const GaussianVariances vac{1.0, 1.0};
    for (double T : {0.3, 0.7, 0.95}) {
        const auto c = correlation_matrix(vac, T);
        CHECK(c.n1 == doctest::Approx(1.0));
        CHECK(c.n2 == doctest::Approx(1.0));
        CHECK(c.c1 == doctest::Approx(0.0));
        CHECK(c.c2 == doctest::Approx(0.0));
    }
    const GaussianVariances v{1.02 * std::exp(0.6), 1.02 * std::exp(-0.6)};
    const auto m = correlation_matrix(v, 0.85).matrix();
    Eigen::Matrix4d V;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) V(i, j) = m[i][j];
    CHECK((V - V.transpose()).norm() < 1e-15);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(V);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("ideal click probability") {
    for (double T : {0.5, 0.8, 0.99}) CHECK(success_prob_ideal({1.0, 1.0}, T) == 0.0);
    const auto v = GaussianVariances::squeezed_vacuum(0.3);
    const double p = success_prob_ideal(v, 0.9);
    CHECK(p == doctest::Approx(kim_oracle(v, 0.9).click_prob).epsilon(1e-12));
    const auto in = fock::build_state(model::Gaussian{v});
    CHECK(p == doctest::Approx(fock::herald(in, 0.9, 1.0).second).epsilon(1e-8));
}

TEST_CASE("conditional characteristic function") {
    const auto v = GaussianVariances::squeezed_vacuum(0.3);
    CHECK(char_kim_conditional(v, 0.8, {0, 0}) == doctest::Approx(1.0).epsilon(1e-13));
    // T -> 1 recovers the squeezed single photon.
    for (PhasePoint eta : {PhasePoint{0.4, 0.2}, PhasePoint{-1.0, 0.8}})
        CHECK(char_kim_conditional(v, 0.999, eta) == doctest::Approx(char_pure_psgs(0.3, eta)).epsilon(1e-3));
    // Mixed input against the truncated-space herald.
    const auto mixed = GaussianVariances::from_db(2.65, -2.56);
    const auto rho = fock::build_state(model::KimConditional{mixed, 0.9}, 40);
    for (PhasePoint eta : {PhasePoint{0.3, -0.6}, PhasePoint{1.2, 0.1}, PhasePoint{0.0, 0.9}})
        CHECK(char_kim_conditional(mixed, 0.9, eta) ==
              doctest::Approx(fock::characteristic(rho, eta).real()).epsilon(1e-6));
    CHECK_THROWS_AS(char_kim_conditional(v, 1.0 - 1e-7, {0, 0}), ZeroProbabilityError);
    CHECK_THROWS_AS(char_kim_conditional({1.0, 1.0}, 0.9, {0, 0}), ZeroProbabilityError);
}

TEST_CASE("conditional state against Gaussian conditioning (random inputs)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ur(0.05, 0.6), uk(1.0, 1.3), uT(0.5, 0.98), uz(-1.0, 1.0);
    for (int i = 0; i < 8; ++i) {
        const double r = ur(rng), k = uk(rng), T = uT(rng);
        const GaussianVariances v{k * std::exp(2 * r), k * std::exp(-2 * r)};
        const auto ref = kim_oracle(v, T);
        const SingleModeState st = SingleModeState::from_model(model::KimConditional{v, T});
        CHECK(success_prob_ideal(v, T) == doctest::Approx(ref.click_prob).epsilon(1e-12));
        for (Ordering j : {Ordering::Wigner, Ordering::Q}) {
            const PhasePoint z{uz(rng), uz(rng)};
            CHECK(st.quasiprob(j, z) == doctest::Approx(ref(ordering_index(j), z.re, z.im)).epsilon(1e-10));
        }
    }
}

TEST_CASE("lossy subtraction") {
    CHECK(quasiprob_lossy(0.3, 1.0 - 1e-5, 1.0, Ordering::Wigner, {0, 0}) ==
          doctest::Approx(-2.0 / kPi).epsilon(1e-3));
    // eps = 1 is the ideal detector acting on S(-r)|0>.
    const GaussianVariances flipped = GaussianVariances::squeezed_vacuum(-0.3);
    const SingleModeState kim = SingleModeState::from_model(model::KimConditional{flipped, 0.95});
    for (auto z : kGrid)
        CHECK(quasiprob_lossy(0.3, 0.95, 1.0, Ordering::Q, z) ==
              doctest::Approx(kim.quasiprob(Ordering::Q, z)).epsilon(1e-8));

    const auto rho = fock::build_state(model::LossyPsgs{0.3, 0.95, 0.6});
    const auto ref = lossy_oracle(0.3, 0.95, 0.6);
    for (auto z : kGrid)
        for (Ordering j : {Ordering::Wigner, Ordering::Q}) {
            const double lit = quasiprob_lossy(0.3, 0.95, 0.6, j, z);
            CHECK(lit == doctest::Approx(fock::quasiprob(rho, j, z)).epsilon(1e-6));
            CHECK(lit == doctest::Approx(ref(ordering_index(j), z.re, z.im)).epsilon(1e-10));
        }
    CHECK(success_prob_lossy(0.3, 0.95, 0.6) == doctest::Approx(ref.click_prob).epsilon(1e-12));

    const auto p = lossy_parameters(0.3, 0.95, 0.6);
    CHECK(p.no_click_prob == doctest::Approx(ref.noclick_prob).epsilon(1e-12));
    CHECK(p.normalization * (1.0 - p.no_click_prob) == doctest::Approx(1.0));
}

TEST_CASE("dark-count mixture") {
    const auto f = [](PhasePoint) { return 1.0; };
    const auto g = [](PhasePoint) { return -1.0; };
    CHECK(mix_dark(0.5, f, g, {0, 0}) == doctest::Approx(0.0));
    CHECK(mix_dark(1.0, f, g, {0, 0}) == doctest::Approx(1.0));
    const auto sub = SingleModeState::from_model(model::LossyPsgs{0.3, 0.99, 0.6});
    const auto sq = SingleModeState::from_model(model::Gaussian{lossy_transmitted_variances(0.3, 0.99)});
    const auto mixed = SingleModeState::from_model(lossy_with_dark_counts(0.3, 0.99, 0.6, 0.8));
    const PhasePoint z{0.2, -0.3};
    CHECK(mixed.quasiprob(Ordering::Wigner, z) ==
          doctest::Approx(mix_dark(0.8, sub.function(Ordering::Wigner), sq.function(Ordering::Wigner), z)));
}

TEST_CASE("families: normalisation, positivity of Q, value at the origin") {
    for (const auto &m : all_families()) {
        CAPTURE(m.describe());
        const auto st = SingleModeState::from_model(m);
        for (Ordering j : {Ordering::Wigner, Ordering::Q}) {
            const auto f = st.function(j);
            const double n = oracle::simpson_plane([&](double x, double y) { return f({x, y}); }, 9.0, 360);
            CHECK(n == doctest::Approx(1.0).epsilon(1e-6));
        }
        const auto q = st.function(Ordering::Q);
        for (double x = -3; x <= 3; x += 0.25)
            for (double y = -3; y <= 3; y += 0.25) CHECK(q({x, y}) >= -1e-12);
        if (const auto *chi = st.characteristic()) CHECK((*chi)(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("families agree with the truncated Fock construction") {
    for (const auto &m : all_families()) {
        CAPTURE(m.describe());
        const auto st = SingleModeState::from_model(m);
        const auto rho = fock::build_state(m);
        for (auto z : kGrid)
            for (Ordering j : {Ordering::Wigner, Ordering::Q})
                CHECK(st.quasiprob(j, z) == doctest::Approx(fock::quasiprob(rho, j, z)).epsilon(1e-6));
    }
}

TEST_CASE("Gaussian smoothing of the Wigner function gives Q") {
    const auto st = SingleModeState::from_model(model::LossyPsgs{0.3, 0.95, 0.6});
    const auto w = st.function(Ordering::Wigner);
    for (PhasePoint z : {PhasePoint{0, 0}, PhasePoint{0.6, -0.2}, PhasePoint{-1.0, 0.9}}) {
        const double smoothed = oracle::simpson_plane(
            [&](double x, double y) { return w({z.re - x, z.im - y}) * 2.0 / kPi * std::exp(-2 * (x * x + y * y)); },
            7.0, 280);
        CHECK(smoothed == doctest::Approx(st.quasiprob(Ordering::Q, z)).epsilon(1e-6));
    }
}

TEST_CASE("conditional state converges to the pure limit linearly in 1 - T") {
    const auto v = GaussianVariances::squeezed_vacuum(0.3);
    const auto gap = [&](double T) {
        double d = 0;
        for (double x = -2; x <= 2; x += 0.1)
            for (double y = -2; y <= 2; y += 0.1)
                d = std::max(d, std::abs(char_kim_conditional(v, T, {x, y}) - char_pure_psgs(0.3, {x, y})));
        return d;
    };
    const double d2 = gap(1 - 1e-2), d3 = gap(1 - 1e-3), d4 = gap(1 - 1e-4);
    CHECK(d3 < d2);
    CHECK(d4 < d3);
    CHECK(d3 / 1e-3 == doctest::Approx(d4 / 1e-4).epsilon(0.05));
    CHECK(d2 / 1e-2 < 2.0 * d4 / 1e-4);
}
