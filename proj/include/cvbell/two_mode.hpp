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

#pragma once

#include <functional>

#include "cvbell/phase_space.hpp"
#include "cvbell/quasiprob.hpp"
#include "cvbell/state_model.hpp"

namespace cvbell {

using TwoModeFunction = std::function<double(PhasePoint, PhasePoint)>;

/// A two-mode quasiprobability together with its single-mode marginals.
/// Immutable once built; safe to share between threads.
struct TwoModeQuasiprob {
    Ordering kind = Ordering::Wigner;
    TwoModeFunction eval;
    SingleModeFunction marginal1;
    SingleModeFunction marginal2;
    bool closed_form_marginals = false;

    double operator()(PhasePoint z1, PhasePoint z2) const { return eval(z1, z2); }
};

/// Beam splitter exp{(theta/2)(a^dag b - b^dag a)}; R = sin^2(theta/2).
struct BeamSplitterConfig {
    double theta = kPi / 2.0;

    double reflectivity() const;
    double transmittivity() const { return 1.0 - reflectivity(); }
    static BeamSplitterConfig from_transmittivity(double T);
};

/// Vacuum quasiprobability of the given ordering.
double vacuum_quasiprob(Ordering j, PhasePoint z);

/// 50:50 split with vacuum in the second port:
///   eval(z1, z2) = single((z1 + z2)/sqrt2) * vac((-z1 + z2)/sqrt2).
/// Marginals are exact (the half-transmitted state).
TwoModeQuasiprob split_5050(const SingleModeState &single, Ordering kind);

/// Same for an arbitrary single-mode function; marginals by quadrature.
TwoModeQuasiprob split_5050(SingleModeFunction single, Ordering kind);

/// Q function of the entangled coherent state obtained from an odd cat of
/// amplitude alpha, beta = alpha / sqrt2, normalised with 1/pi^2.
double q_ecs(double alpha, PhasePoint z1, PhasePoint z2);
/// q_ecs packaged with its closed-form marginals.
TwoModeQuasiprob make_q_ecs(double alpha);

/// marginal_k(z), via the stored marginal.
double marginal(const TwoModeQuasiprob &two, int mode, PhasePoint z);

/// Integral of eval over the other mode by adaptive quadrature on |z| <= 8.
/// Throws ConvergenceError with the achieved estimate.
double marginal_quadrature(const TwoModeFunction &eval, int mode, PhasePoint z, double abs_tol = 1e-9);

}  // namespace cvbell
