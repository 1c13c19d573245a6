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

// Truncated Fock-space numerics. Independent of the closed forms: states
// are built from operator exponentials and projectors, and phase-space
// functions are read off as displaced parity / displaced vacuum overlaps.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "cvbell/phase_space.hpp"
#include "cvbell/state_model.hpp"
#include "cvbell/two_mode.hpp"

namespace cvbell::fock {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kDefaultSingleCutoff = 40;
inline constexpr int kDefaultTwoModeCutoff = 20;
inline constexpr int kMaxCutoff = 100;

/// Density matrix on one mode (dim = cutoff + 1) or two modes
/// (dim^2, index n1 * dim + n2).
class FockState {
   public:
    FockState(Matrix rho, int modes);
    static FockState pure(const Vector &psi, int modes);

    int modes() const { return modes_; }
    int dim() const { return dim_; }  // per mode
    int cutoff() const { return dim_ - 1; }
    const Matrix &matrix() const { return rho_; }

    double trace() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;
    /// Population of the top 10% of levels (of either mode).
    double tail_mass() const;

   private:
    Matrix rho_;
    int modes_;
    int dim_;
};

// State vectors ---------------------------------------------------------

Vector number_state(int n, int dim);
Vector coherent(cplx beta, int dim);
Vector cat(double alpha, Parity parity, int dim);
/// S(r) = exp((r/2)(a^2 - a^dag^2)) restricted to dim levels, computed in
/// a padded space and truncated.
Matrix squeeze_operator(double r, int dim);
/// a^dag S(r)|0>, normalised.
Vector photon_added_squeezed(double r, int dim);

/// Zero-mean Gaussian with the given variances: S(r_g) rho_th S(r_g)^dag,
/// 2 nbar + 1 = sqrt(A B), e^{2 r_g} = sqrt(A / B).
FockState squeezed_thermal(const GaussianVariances &v, int cutoff);

/// Tail-mass limits for build_state. Truncating a pure state leaves
/// amplitude errors of order sqrt(tail), so single-mode builds use tight
/// limits. Two-mode checks only probe small displacements and use looser
/// ones to keep the (cutoff + 1)^2 space small.
struct TailLimits {
    double pure;
    double mixed;
};
inline constexpr TailLimits kSingleModeTail{1e-20, 1e-16};
inline constexpr TailLimits kTwoModeTail{1e-10, 1e-8};

/// Builds the single-mode state; raises the cutoff (doubling, up to
/// kMaxCutoff) until the tail mass is below the limit for the state's
/// kind. Throws CutoffError when that fails.
FockState build_state(const StateModel &m, int cutoff = kDefaultSingleCutoff, TailLimits limits = kSingleModeTail);

// Two-mode operations ---------------------------------------------------

/// exp{(theta/2)(a^dag b - b^dag a)} on two modes of dim levels each.
Matrix beam_splitter(const BeamSplitterConfig &bs, int dim);
/// Conjugation by beam_splitter(BeamSplitterConfig::from_transmittivity(T)).
FockState apply_bs(const FockState &two, double T);
FockState apply_bs(const FockState &two, const BeamSplitterConfig &bs);
FockState tensor(const FockState &a, const FockState &b);
FockState partial_trace(const FockState &two, int keep_mode);

/// Click on mode 2 with an on/off detector of efficiency epsilon, POVM
/// 1 - sum_n (1 - epsilon)^n |n><n|. Returns the renormalised mode-1 state
/// and the click probability. Throws ZeroProbabilityError below 1e-14.
std::pair<FockState, double> condition_click(const FockState &two, double epsilon);

/// Mixes `single` with vacuum at transmittivity T and heralds on a click in
/// the reflected arm. Equivalent to condition_click(apply_bs(single x |0>)),
/// but works on eigenvectors so large cutoffs stay cheap.
std::pair<FockState, double> herald(const FockState &single, double T, double epsilon);

/// 50:50 split with vacuum in port 2, in the orientation where the
/// Wigner function becomes W((z1 + z2)/sqrt2) W_vac((-z1 + z2)/sqrt2).
FockState split_5050(const FockState &single);

// Measurements ----------------------------------------------------------

/// <m|D(alpha)|n> for m, n < dim.
Matrix displacement(cplx alpha, int dim);

/// Tr[rho D(z) (-1)^n D(z)^dag]. Throws CutoffError unless |z|^2 < 0.1 cutoff.
double displaced_parity(const FockState &single, PhasePoint z);
/// <z|rho|z>.
double displaced_vacuum_overlap(const FockState &single, PhasePoint z);
double displaced_parity(const FockState &two, PhasePoint z1, PhasePoint z2);
double displaced_vacuum_overlap(const FockState &two, PhasePoint z1, PhasePoint z2);

/// Tr[rho D(eta)].
cplx characteristic(const FockState &single, PhasePoint eta);

inline double wigner(const FockState &s, PhasePoint z) { return 2.0 / kPi * displaced_parity(s, z); }
inline double husimi(const FockState &s, PhasePoint z) { return displaced_vacuum_overlap(s, z) / kPi; }
inline double wigner(const FockState &s, PhasePoint z1, PhasePoint z2) {
    return 4.0 / (kPi * kPi) * displaced_parity(s, z1, z2);
}
inline double husimi(const FockState &s, PhasePoint z1, PhasePoint z2) {
    return displaced_vacuum_overlap(s, z1, z2) / (kPi * kPi);
}
double quasiprob(const FockState &s, Ordering j, PhasePoint z);

}  // namespace cvbell::fock
