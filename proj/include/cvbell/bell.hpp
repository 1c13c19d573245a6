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

#include <array>
#include <cstdint>
#include <functional>

#include "cvbell/phase_space.hpp"
#include "cvbell/two_mode.hpp"

namespace cvbell {

inline constexpr double kChshClassicalBound = 2.0;
inline constexpr double kTsirelsonBound = 2.8284271247461900976;  // 2 sqrt 2

/// The four local displacement settings of a two-party Bell test.
struct DisplacementSet {
    PhasePoint z1, z2, z1p, z2p;

    /// (z1r, z1i, z2r, z2i, z1pr, z1pi, z2pr, z2pi).
    std::array<double, 8> to_array() const;
    static DisplacementSet from_array(const std::array<double, 8> &x);
    double norm() const;
    bool finite() const;
};

/// (pi^2/4) [W(z1,z2) + W(z1,z2') + W(z1',z2) - W(z1',z2')].
double bell_chsh(const TwoModeQuasiprob &two, const DisplacementSet &d);

/// pi^2 [Q(z1,z2) + Q(z1,z2') + Q(z1',z2) - Q(z1',z2')] - pi [Q1(z1) + Q2(z2)].
double bell_ch(const TwoModeQuasiprob &two, const DisplacementSet &d);

enum class Functional { Chsh, Ch };
const char *to_string(Functional f);

/// What the optimizer maximizes for the CH functional. Magnitude maximizes
/// |B_CH|, so a violation shows up as B_CH < -1; Upper maximizes the signed
/// value, where a violation is B_CH > 0. CHSH always uses |B_CHSH|.
enum class ChSense { Magnitude, Upper };
const char *to_string(ChSense s);

struct OptimizerOptions {
    /// Total local searches. The start sequence is fixed: symmetric axis
    /// seeds, then Halton points in [-1.5, 1.5]^8, then seeded uniform
    /// points. Taking more starts only appends to it.
    int starts = 128;
    std::uint64_t seed = 1;
    double box = 3.0;  // |z| bound on each setting
    double tol = 1e-10;
    int max_iterations = 20000;
    int jobs = 1;
    ChSense ch_sense = ChSense::Magnitude;
};

inline constexpr int kSymmetricSeeds = 48;
inline constexpr int kHaltonStarts = 64;
inline constexpr int kRandomStarts = 16;

struct BellResult {
    double value = 0.0;  // signed functional value at argmax
    DisplacementSet argmax;
    int starts_used = 0;
    int converged_starts = 0;
    bool converged = false;  // the winning start met the tolerance
};

/// Start point i of the sequence described in OptimizerOptions.
std::array<double, 8> start_point(int i, std::uint64_t seed);

/// Multi-start Nelder-Mead maximisation of score over the 8 coordinates.
/// Ties within 1e-9 go to the argmax with the smallest norm. The result
/// does not depend on jobs.
BellResult maximize(const std::function<double(const DisplacementSet &)> &score,
                    const std::function<double(const DisplacementSet &)> &value, const OptimizerOptions &opts);

/// Optimizes the given functional. Throws InvalidArgument on a kind mismatch.
BellResult optimize(Functional f, const TwoModeQuasiprob &two, const OptimizerOptions &opts = {});

/// CHSH: |value| > 2. CH: value outside [-1, 0]. Both with 1e-9 slack.
bool violates(Functional f, double value);

}  // namespace cvbell
