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

#include "cvbell/two_mode.hpp"

#include <cmath>

#include "cvbell/error.hpp"
#include "cvbell/quadrature.hpp"

namespace cvbell {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kQuadratureHalfWidth = 8.0;

}  // namespace

double BeamSplitterConfig::reflectivity() const {
    const double s = std::sin(0.5 * theta);
    return s * s;
}

BeamSplitterConfig BeamSplitterConfig::from_transmittivity(double T) {
    if (!(T >= 0.0 && T <= 1.0)) throw InvalidArgument("beam splitter: T must lie in [0, 1]");
    return {2.0 * std::asin(std::sqrt(1.0 - T))};
}

double vacuum_quasiprob(Ordering j, PhasePoint z) { return j == Ordering::Wigner ? wigner_vacuum(z) : q_vacuum(z); }

namespace {

TwoModeFunction split_eval(SingleModeFunction f, Ordering kind) {
    return [f = std::move(f), kind](PhasePoint z1, PhasePoint z2) {
        const PhasePoint u{kInvSqrt2 * (z1.re + z2.re), kInvSqrt2 * (z1.im + z2.im)};
        const PhasePoint v{kInvSqrt2 * (z2.re - z1.re), kInvSqrt2 * (z2.im - z1.im)};
        return f(u) * vacuum_quasiprob(kind, v);
    };
}

}  // namespace

TwoModeQuasiprob split_5050(const SingleModeState &single, Ordering kind) {
    TwoModeQuasiprob out;
    out.kind = kind;
    out.eval = split_eval(single.function(kind), kind);
    // Both arms carry the half-transmitted state; the vacuum port is
    // symmetric, so the sign of the reflected amplitude does not matter.
    const auto half = single.after_half_transmission().function(kind);
    out.marginal1 = half;
    out.marginal2 = half;
    out.closed_form_marginals = true;
    return out;
}

TwoModeQuasiprob split_5050(SingleModeFunction single, Ordering kind) {
    if (!single) throw InvalidArgument("split_5050: empty single-mode function");
    TwoModeQuasiprob out;
    out.kind = kind;
    out.eval = split_eval(std::move(single), kind);
    out.marginal1 = [e = out.eval](PhasePoint z) { return marginal_quadrature(e, 1, z); };
    out.marginal2 = [e = out.eval](PhasePoint z) { return marginal_quadrature(e, 2, z); };
    return out;
}

double q_ecs(double alpha, PhasePoint z1, PhasePoint z2) {
    if (!(alpha > 0.0)) throw InvalidArgument("q_ecs: alpha must be positive");
    const double beta = alpha * kInvSqrt2;
    const double n2 = 1.0 / (2.0 * (1.0 - std::exp(-2.0 * alpha * alpha)));
    const auto d2 = [](PhasePoint z, double shift) { return (z.re - shift) * (z.re - shift) + z.im * z.im; };
    // The last two terms are complex conjugates of each other:
    //   exp[-(z1 - b)(z1* + b) - (z2 + b)(z2* - b) - 4b^2]
    //     = exp(-|z1|^2 - |z2|^2 - 2b^2) exp(-2ib(z1_i - z2_i)).
    const double cross =
        2.0 * std::exp(-z1.norm2() - z2.norm2() - 2.0 * beta * beta) * std::cos(2.0 * beta * (z1.im - z2.im));
    return n2 / (kPi * kPi) *
           (std::exp(-d2(z1, beta) - d2(z2, -beta)) + std::exp(-d2(z1, -beta) - d2(z2, beta)) - cross);
}

TwoModeQuasiprob make_q_ecs(double alpha) {
    if (!(alpha > 0.0)) throw InvalidArgument("q_ecs: alpha must be positive");
    const double beta = alpha * kInvSqrt2;
    const CatState arm{beta, Parity::Odd, std::exp(-2.0 * beta * beta)};
    TwoModeQuasiprob out;
    out.kind = Ordering::Q;
    out.eval = [alpha](PhasePoint z1, PhasePoint z2) { return q_ecs(alpha, z1, z2); };
    out.marginal1 = [arm](PhasePoint z) { return arm.quasiprob(Ordering::Q, z); };
    out.marginal2 = out.marginal1;
    out.closed_form_marginals = true;
    return out;
}

double marginal(const TwoModeQuasiprob &two, int mode, PhasePoint z) {
    if (mode != 1 && mode != 2) throw InvalidArgument("marginal: mode must be 1 or 2");
    const auto &m = mode == 1 ? two.marginal1 : two.marginal2;
    if (m) return m(z);
    return marginal_quadrature(two.eval, mode, z);
}

double marginal_quadrature(const TwoModeFunction &eval, int mode, PhasePoint z, double abs_tol) {
    if (mode != 1 && mode != 2) throw InvalidArgument("marginal: mode must be 1 or 2");
    const auto f = [&](double x, double y) {
        const PhasePoint w{x, y};
        return mode == 1 ? eval(z, w) : eval(w, z);
    };
    return integrate_plane(f, kQuadratureHalfWidth, abs_tol).value;
}

}  // namespace cvbell
