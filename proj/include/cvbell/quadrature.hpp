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

namespace cvbell {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
};

/// Adaptive nested Gauss-Kronrod integral of f over [-L, L]^2.
/// Throws ConvergenceError (carrying the achieved estimate) when the error
/// estimate stays above 10 * abs_tol.
QuadratureResult integrate_plane(const std::function<double(double, double)> &f, double half_width = 8.0,
                                 double abs_tol = 1e-9);

}  // namespace cvbell
