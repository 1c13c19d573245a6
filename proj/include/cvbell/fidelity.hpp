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

// How well a squeezed single photon S(r)|1> approximates an odd cat state.

#pragma once

#include <vector>

namespace cvbell {

/// Amplitude of |2n+1> in S(r)|1>:
///   (-tanh r)^n sqrt((2n+1)!) / ((cosh r)^{3/2} 2^n n!).
double psgs_fock_coeff(double r, int n);

/// |<cat_-(alpha)| S(r)|1>|^2.
double fidelity(double r, double alpha);

/// The maximizing squeeze parameter, taken on the r <= 0 branch:
/// cosh^2 r = 1/2 + sqrt(9 + 4 alpha^4) / 6.
double optimal_r(double alpha);

struct ScsApprox {
    double alpha;
    double r_opt;
    double fidelity;
};

ScsApprox best_approximation(double alpha);
std::vector<ScsApprox> max_fidelity_curve(const std::vector<double> &alphas);

}  // namespace cvbell
