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

#include "cvbell/error.hpp"
#include "cvbell/fidelity.hpp"
#include "cvbell/fock.hpp"
#include "doctest.h"

using namespace cvbell;
using namespace cvbell::fock;

namespace {

void check_physical(const FockState &s) {
    CHECK(s.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.hermiticity_error() < 1e-12);
    CHECK(s.min_eigenvalue() > -1e-10);
}

Eigen::VectorXd number_distribution(const FockState &two) {
    const int d = two.dim();
    Eigen::VectorXd p = Eigen::VectorXd::Zero(2 * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) p(a + b) += two.matrix()(a * d + b, a * d + b).real();
    return p;
}

}  // namespace

TEST_CASE("basic states") {
    const auto vac = build_state(model::Vacuum{});
    CHECK(std::abs(vac.matrix()(0, 0) - cplx(1.0)) < 1e-15);
    CHECK(vac.matrix().norm() == doctest::Approx(1.0));

    const auto psgs = build_state(model::PurePsgs{-0.313});
    // Pure state: rho = |psi><psi|; compare |amplitudes| and relative signs via rho(1, k).
    const double c0 = psgs_fock_coeff(-0.313, 0);
    for (int n = 0; 2 * n + 1 < psgs.dim(); ++n) {
        const double expect = c0 * psgs_fock_coeff(-0.313, n);
        CHECK(psgs.matrix()(1, 2 * n + 1).real() == doctest::Approx(expect).epsilon(1e-12));
        CHECK(std::abs(psgs.matrix()(2 * n, 2 * n)) < 1e-14);
    }

    const auto odd = cat(1.0, Parity::Odd, 30);
    for (int n = 0; n < 30; n += 2) CHECK(std::abs(odd(n)) < 1e-15);
    // <n+2|psi> / <n|psi> = alpha^2 / sqrt((n+1)(n+2)) on odd n
    for (int n = 1; n + 2 < 30; n += 2)
        CHECK(odd(n + 2).real() == doctest::Approx(odd(n).real() / std::sqrt((n + 1.0) * (n + 2.0))).epsilon(1e-12));
    check_physical(psgs);
}

TEST_CASE("beam splitter") {
    const int d = 8;
    const auto one_zero = tensor(FockState::pure(number_state(1, d), 1), FockState::pure(number_state(0, d), 1));
    const auto same = apply_bs(one_zero, 1.0);
    CHECK((same.matrix() - one_zero.matrix()).norm() < 1e-14);

    const auto half = apply_bs(one_zero, 0.5);
    const auto &m = half.matrix();
    CHECK(std::abs(m(1 * d + 0, 1 * d + 0)) == doctest::Approx(0.5));
    CHECK(std::abs(m(0 * d + 1, 0 * d + 1)) == doctest::Approx(0.5));
    CHECK(std::abs(m(1 * d + 0, 0 * d + 1)) == doctest::Approx(0.5));

    Vector a = Vector::Zero(d), b = Vector::Zero(d);
    a(1) = 0.6;
    a(4) = cplx(0.0, 0.8);
    b(0) = 0.8;
    b(3) = -0.6;
    const auto in = tensor(FockState::pure(a, 1), FockState::pure(b, 1));
    const auto out = apply_bs(in, 0.37);
    CHECK((number_distribution(in) - number_distribution(out)).cwiseAbs().maxCoeff() < 1e-12);
    check_physical(out);
}

TEST_CASE("click conditioning") {
    const auto vac2 = tensor(build_state(model::Vacuum{}, 10, kTwoModeTail), build_state(model::Vacuum{}, 10, kTwoModeTail));
    CHECK_THROWS_AS(condition_click(vac2, 0.6), ZeroProbabilityError);
    CHECK_THROWS_AS(condition_click(vac2, 1.0), ZeroProbabilityError);

    const auto sq = build_state(model::Gaussian{GaussianVariances::squeezed_vacuum(0.3)}, 20, kTwoModeTail);
    const auto mixed = apply_bs(tensor(sq, build_state(model::Vacuum{}, 20, kTwoModeTail)), 0.9);
    const auto [state, p] = condition_click(mixed, 1.0);
    CHECK(p == doctest::Approx(success_prob_ideal(GaussianVariances::squeezed_vacuum(0.3), 0.9)).epsilon(1e-8));
    check_physical(state);

    // The eigenvector path gives the same state.
    const auto [fast, pf] = herald(sq, 0.9, 0.6);
    const auto [slow, ps] = condition_click(mixed, 0.6);
    CHECK(pf == doctest::Approx(ps).epsilon(1e-12));
    CHECK((fast.matrix() - slow.matrix()).norm() < 1e-10);

    // eps = 0.6 against the closed form (input S(-r)|0>).
    const auto lossy = build_state(model::LossyPsgs{0.3, 0.9, 0.6});
    for (double x : {-0.8, 0.0, 0.5})
        for (double y : {-0.4, 0.3}) {
            CHECK(wigner(lossy, {x, y}) ==
                  doctest::Approx(quasiprob_lossy(0.3, 0.9, 0.6, Ordering::Wigner, {x, y})).epsilon(1e-6));
        }
}

TEST_CASE("displaced parity and vacuum overlap") {
    const auto vac = build_state(model::Vacuum{});
    CHECK(displaced_parity(vac, {0, 0}) == doctest::Approx(1.0));
    CHECK(displaced_vacuum_overlap(vac, {0, 0}) == doctest::Approx(1.0));
    const auto one = FockState::pure(number_state(1, 41), 1);
    CHECK(displaced_parity(one, {0, 0}) == doctest::Approx(-1.0));

    const auto psgs = build_state(model::PurePsgs{0.3});
    CHECK(displaced_parity(psgs, {0.3, -0.2}) == doctest::Approx(kPi / 2 * wigner_pure_psgs(0.3, {0.3, -0.2})).epsilon(1e-10));

    const cplx beta{0.7, -0.4};
    const auto coh = FockState::pure(coherent(beta, 41), 1);
    CHECK(displaced_vacuum_overlap(coh, {beta.real(), beta.imag()}) == doctest::Approx(1.0).epsilon(1e-12));

    const auto odd = build_state(model::Scs{1.0, Parity::Odd});
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0})
        for (double y : {-1.0, 0.0, 1.0})
            CHECK(displaced_vacuum_overlap(odd, {x, y}) == doctest::Approx(kPi * q_scs(1.0, Parity::Odd, {x, y})).epsilon(1e-10));

    CHECK_THROWS_AS(displaced_parity(vac, {2.1, 0.0}), CutoffError);
}

TEST_CASE("displacement operator") {
    const int d = 40;
    const auto D = displacement({0.6, 0.3}, d);
    const auto Dm = displacement({-0.6, -0.3}, d);
    const Matrix prod = (D * Dm).topLeftCorner(10, 10);
    CHECK((prod - Matrix::Identity(10, 10)).norm() < 1e-12);
    const Vector moved = D * number_state(0, d);
    CHECK((moved - coherent({0.6, 0.3}, d)).norm() < 1e-12);
}

TEST_CASE("built states are physical and converged in the cutoff") {
    const std::vector<StateModel> models{model::PurePsgs{0.5}, model::Scs{2.0, Parity::Odd},
                                         model::KimConditional{GaussianVariances::from_db(4.26, -3.57), 0.7},
                                         model::LossyPsgs{0.5, 0.8, 0.6}};
    for (const auto &m : models) {
        CAPTURE(m.describe());
        const auto a = build_state(m, 40);
        const auto b = build_state(m, 80);
        check_physical(a);
        CHECK(a.tail_mass() < 1e-10);
        for (PhasePoint z : {PhasePoint{0, 0}, PhasePoint{1.0, -0.5}, PhasePoint{-1.5, 1.2}}) {
            CHECK(std::abs(husimi(a, z) - husimi(b, z)) < 1e-9);
            CHECK(std::abs(wigner(a, z) - wigner(b, z)) < 1e-9);
        }
    }
    CHECK_THROWS_AS(build_state(model::Scs{9.0, Parity::Odd}, 40), CutoffError);
}

TEST_CASE("split and partial trace") {
    const auto single = build_state(model::PurePsgs{0.3}, 20, kTwoModeTail);
    const auto two = split_5050(single);
    CHECK(two.modes() == 2);
    const auto small = build_state(model::Scs{0.7, Parity::Odd}, 10, kTwoModeTail);
    const FockState vac = FockState::pure(number_state(0, small.dim()), 1);
    const auto dense = apply_bs(tensor(small, vac), BeamSplitterConfig{-kPi / 2.0});
    CHECK((split_5050(small).matrix() - dense.matrix()).norm() < 1e-12);
    check_physical(two);
    const auto r1 = partial_trace(two, 1);
    const auto r2 = partial_trace(two, 2);
    const auto expect = SingleModeState::from_model(model::PurePsgs{0.3}).after_half_transmission();
    for (PhasePoint z : {PhasePoint{0, 0}, PhasePoint{0.4, 0.3}}) {
        CHECK(husimi(r1, z) == doctest::Approx(expect.quasiprob(Ordering::Q, z)).epsilon(1e-10));
        CHECK(husimi(r2, z) == doctest::Approx(expect.quasiprob(Ordering::Q, z)).epsilon(1e-10));
    }
}
