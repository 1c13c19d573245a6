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

#include "cvbell/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "cvbell/error.hpp"

namespace cvbell {

QuadratureResult integrate_plane(const std::function<double(double, double)> &f, double half_width, double abs_tol) {
    using boost::math::quadrature::gauss_kronrod;
    constexpr unsigned kMaxDepth = 12;
    const double L = half_width;
    // Relative tolerance for the 1-D passes; the integrands here are O(1).
    const double rel = abs_tol * 0.1;

    double inner_error_sum = 0.0;
    double outer_error = 0.0;
    auto inner = [&](double x) {
        double err = 0.0;
        const double v = gauss_kronrod<double, 31>::integrate([&](double y) { return f(x, y); }, -L, L, kMaxDepth, rel,
                                                              &err);
        inner_error_sum = std::max(inner_error_sum, err);
        return v;
    };
    const double value = gauss_kronrod<double, 31>::integrate(inner, -L, L, kMaxDepth, rel, &outer_error);
    const double error = outer_error + 2.0 * L * inner_error_sum;
    if (!std::isfinite(value) || error > 10.0 * abs_tol)
        throw ConvergenceError("integrate_plane: quadrature did not reach the requested accuracy", error);
    return {value, error};
}

}  // namespace cvbell
