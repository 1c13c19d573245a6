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

#include <cmath>

#include "cvbell/fock.hpp"
#include "cvbell/two_mode.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cvbell;

namespace {

const double kPts[] = {-0.45, 0.1, 0.6};

// 4-D Simpson integral over [-L, L]^4 with n panels per axis.
double simpson4(const TwoModeFunction &f, double L, int n) {
    return oracle::simpson_plane(
        [&](double x1, double y1) {
            return oracle::simpson_plane([&](double x2, double y2) { return f({x1, y1}, {x2, y2}); }, L, n);
        },
        L, n);
}

}  // namespace

TEST_CASE("beam splitter parametrisation") {
    CHECK(BeamSplitterConfig{}.transmittivity() == doctest::Approx(0.5));
    for (double T : {0.1, 0.5, 0.93}) CHECK(BeamSplitterConfig::from_transmittivity(T).transmittivity() ==
                                            doctest::Approx(T).epsilon(1e-14));
}

TEST_CASE("splitting the vacuum gives the vacuum product") {
    const auto vac = SingleModeState::from_model(model::Vacuum{});
    for (Ordering j : {Ordering::Wigner, Ordering::Q}) {
        const auto two = split_5050(vac, j);
        for (double a : kPts)
            for (double b : kPts) {
                const PhasePoint z1{a, b}, z2{b, -a};
                CHECK(two(z1, z2) == doctest::Approx(vacuum_quasiprob(j, z1) * vacuum_quasiprob(j, z2)));
            }
    }
}

TEST_CASE("split squeezed photon at the origin") {
    const auto two = split_5050(SingleModeState::from_model(model::PurePsgs{0.4}), Ordering::Wigner);
    CHECK(two({0, 0}, {0, 0}) == doctest::Approx(-2.0 / kPi * 2.0 / kPi));
}

TEST_CASE("split states agree with the two-mode Fock construction") {
    const std::vector<StateModel> models{model::PurePsgs{0.3}, model::Scs{1.0, Parity::Odd},
                                         model::LossyPsgs{0.3, 0.95, 0.6}};
    for (const auto &m : models) {
        CAPTURE(m.describe());
        const auto st = SingleModeState::from_model(m);
        const auto rho = fock::split_5050(fock::build_state(m, 20, fock::kTwoModeTail));
        for (Ordering j : {Ordering::Wigner, Ordering::Q}) {
            const auto two = split_5050(st, j);
            for (double a : kPts)
                for (double b : kPts)
                    for (double c : kPts)
                        for (double d : kPts) {
                            const PhasePoint z1{a, b}, z2{c, d};
                            const double ref =
                                j == Ordering::Wigner ? fock::wigner(rho, z1, z2) : fock::husimi(rho, z1, z2);
                            CHECK(two(z1, z2) == doctest::Approx(ref).epsilon(1e-7));
                        }
        }
    }
}

TEST_CASE("closed-form marginals equal marginal quadrature") {
    const auto st = SingleModeState::from_model(model::PurePsgs{0.3});
    for (Ordering j : {Ordering::Wigner, Ordering::Q}) {
        const auto two = split_5050(st, j);
        CHECK(two.closed_form_marginals);
        for (PhasePoint z : {PhasePoint{0, 0}, PhasePoint{0.4, -0.3}, PhasePoint{-1.1, 0.5}}) {
            CHECK(marginal(two, 1, z) == doctest::Approx(marginal_quadrature(two.eval, 1, z)).epsilon(1e-7));
            CHECK(marginal(two, 2, z) == doctest::Approx(marginal_quadrature(two.eval, 2, z)).epsilon(1e-7));
        }
    }
    // Function-based split: marginals come from quadrature.
    const auto generic = split_5050(st.function(Ordering::Q), Ordering::Q);
    CHECK_FALSE(generic.closed_form_marginals);
    const auto exact = split_5050(st, Ordering::Q);
    CHECK(marginal(generic, 1, {0.2, 0.1}) == doctest::Approx(marginal(exact, 1, {0.2, 0.1})).epsilon(1e-7));
}

TEST_CASE("marginal against the partial trace") {
    const StateModel m = model::PurePsgs{0.3};
    const auto two = split_5050(SingleModeState::from_model(m), Ordering::Q);
    const auto reduced = fock::partial_trace(fock::split_5050(fock::build_state(m, 20, fock::kTwoModeTail)), 1);
    for (PhasePoint z : {PhasePoint{0, 0}, PhasePoint{0.5, 0.2}})
        CHECK(marginal(two, 1, z) == doctest::Approx(fock::husimi(reduced, z)).epsilon(1e-8));
}

TEST_CASE("entangled coherent state Q function") {
    for (double alpha : {0.5, 1.0}) {
        CAPTURE(alpha);
        const auto two = make_q_ecs(alpha);
        CHECK(simpson4(two.eval, 6.0, 48) == doctest::Approx(1.0).epsilon(1e-6));
        for (double a : kPts)
            for (double b : kPts)
                for (double c : kPts)
                    for (double d : kPts) CHECK(two({a, b}, {c, d}) >= -1e-15);
        for (PhasePoint z : {PhasePoint{0, 0}, PhasePoint{0.6, -0.45}})
            CHECK(marginal(two, 2, z) == doctest::Approx(marginal_quadrature(two.eval, 2, z)).epsilon(1e-8));
    }
    // The same state as the split odd cat, with the second mode mirrored.
    const auto cat_split = fock::split_5050(fock::build_state(model::Scs{1.0, Parity::Odd}, 20, fock::kTwoModeTail));
    for (double a : kPts)
        for (double b : kPts)
            for (double c : kPts) {
                const PhasePoint z1{a, b}, z2{c, a};
                CHECK(q_ecs(1.0, z1, z2) ==
                      doctest::Approx(fock::husimi(cat_split, z1, PhasePoint{-z2.re, -z2.im})).epsilon(1e-8));
            }
}
