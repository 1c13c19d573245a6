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

// Closed-form characteristic functions and quasiprobabilities of the
// single-mode states: vacuum, cat states, squeezed single photons and
// photon-subtracted Gaussian states with a realistic tap beam splitter and
// click detector.
//
// Squeezing convention: S(r) = exp((r/2)(a^2 - a^dag^2)), so r > 0 narrows
// the Wigner function along z_r. Formulas keep r literal; nothing flips its
// sign behind the caller's back.

#pragma once

#include <array>
#include <functional>

#include "cvbell/phase_space.hpp"

namespace cvbell {

/// Diagonal second moments of a zero-mean Gaussian state, written as its
/// characteristic function exp(-A eta_r^2 / 2 - B eta_i^2 / 2). Vacuum is
/// A = B = 1; A * B = 1 iff the state is pure.
struct GaussianVariances {
    double A = 1.0;
    double B = 1.0;

    /// Throws InvalidArgument unless A, B > 0 and A * B >= 1.
    void validate() const;
    double product() const { return A * B; }

    /// Squeezed vacuum S(r)|0>: A = e^{2r}, B = e^{-2r}.
    static GaussianVariances squeezed_vacuum(double r);
    /// Variances quoted in dB relative to the vacuum level.
    static GaussianVariances from_db(double a_db, double b_db);
};

/// 10^{dB/10}, vacuum variance = 1.
double db_to_variance(double db);

/// Entries of the 4x4 covariance of the two beam-splitter outputs for a
/// Gaussian input of variances (A, B) mixed with vacuum at transmittivity T.
struct CorrelationMatrix {
    double n1, n2, c1, c2, m1, m2;

    /// Rows/columns ordered (eta_r, eta_i, xi_r, xi_i).
    std::array<std::array<double, 4>, 4> matrix() const;
};

CorrelationMatrix correlation_matrix(const GaussianVariances &v, double T);

// ---------------------------------------------------------------------------
// Vacuum and cat states

double wigner_vacuum(PhasePoint z);
double q_vacuum(PhasePoint z);

enum class Parity { Even, Odd };

/// N (|g> +- |-g>) with real amplitude g, optionally with its coherences
/// damped by `coherence` in [0, 1]. coherence = 1 is the pure cat state;
/// the reduced state of a split cat is again of this form.
struct CatState {
    double amplitude = 1.0;
    Parity parity = Parity::Odd;
    double coherence = 1.0;

    double quasiprob(Ordering j, PhasePoint z) const;
    /// State of one output arm after a 50:50 beam splitter with vacuum.
    CatState after_half_transmission() const;
};

double wigner_scs(double alpha, Parity parity, PhasePoint z);
double q_scs(double alpha, Parity parity, PhasePoint z);

// ---------------------------------------------------------------------------
// Pure photon-subtracted squeezed vacuum, a S(r)|0> ~ S(r)|1>

double char_pure_psgs(double r, PhasePoint eta);
double wigner_pure_psgs(double r, PhasePoint z);
AtomSum characteristic_pure_psgs(double r);

/// Gaussian state with the given variances.
AtomSum characteristic_gaussian(const GaussianVariances &v);

// ---------------------------------------------------------------------------
// Photon subtraction with a tap beam splitter of transmittivity T and an
// ideal on/off detector on the reflected arm.

/// Largest transmittivity accepted by the conditional model. Above it the
/// click probability is too small to normalise reliably.
inline constexpr double kMaxConditioningTransmittivity = 1.0 - 1e-6;

/// Probability that the on/off detector clicks, 1 - 2 / sqrt((1+m1)(1+m2)).
double success_prob_ideal(const GaussianVariances &v, double T);

/// Characteristic function of the heralded state; 1 at the origin.
/// Throws ZeroProbabilityError when the click probability is below 1e-12
/// or T exceeds kMaxConditioningTransmittivity.
double char_kim_conditional(const GaussianVariances &v, double T, PhasePoint zeta);
AtomSum characteristic_kim_conditional(const GaussianVariances &v, double T);

// ---------------------------------------------------------------------------
// Photon subtraction from a pure squeezed vacuum with a detector of
// efficiency epsilon. Here r > 0 stretches the Wigner function along z_r,
// i.e. the input is S(-r)|0> in the convention above.

struct LossyParameters {
    double a1_plus, a1_minus;  // transmitted arm, unconditioned (vacuum = 1/2)
    double a2_plus, a2_minus;  // transmitted arm, given no click
    double h_plus, h_minus;    // reflected arm
    double sigma_m;            // detector no-click Gaussian width
    double no_click_prob;      // 1 / (epsilon sqrt(Det[H + sigma_M]))
    double normalization;      // N_epsilon = 1 / (1 - no_click_prob)
};

LossyParameters lossy_parameters(double r, double T, double epsilon);

/// s-ordered quasiprobability of the heralded state, evaluated literally
/// from the Gaussian components G_1, G_2 with the literal j-dependence.
double quasiprob_lossy(double r, double T, double epsilon, Ordering j, PhasePoint z);
double success_prob_lossy(double r, double T, double epsilon);
AtomSum characteristic_lossy(double r, double T, double epsilon);
/// The transmitted squeezed state without any conditioning (component G_1).
GaussianVariances lossy_transmitted_variances(double r, double T);

// ---------------------------------------------------------------------------

using SingleModeFunction = std::function<double(PhasePoint)>;

/// pm * w_sub(z) + (1 - pm) * w_sq(z): heralded state diluted by dark-count
/// heralds of the unsubtracted squeezed state.
double mix_dark(double pm, const SingleModeFunction &w_sub, const SingleModeFunction &w_sq, PhasePoint z);

}  // namespace cvbell
