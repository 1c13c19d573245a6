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

#include "cvbell/fidelity.hpp"

#include <cmath>

#include "cvbell/error.hpp"

namespace cvbell {

double psgs_fock_coeff(double r, int n) {
    if (n < 0) throw InvalidArgument("psgs_fock_coeff: n must be non-negative");
    const double t = std::tanh(r);
    if (n == 0) return std::pow(std::cosh(r), -1.5);
    if (t == 0.0) return 0.0;
    const double log_mag = 0.5 * std::lgamma(2.0 * n + 2.0) - n * std::log(2.0) - std::lgamma(n + 1.0) +
                           n * std::log(std::abs(t)) - 1.5 * std::log(std::cosh(r));
    const double sign = (t > 0.0 && n % 2 == 1) ? -1.0 : 1.0;
    return sign * std::exp(log_mag);
}

double fidelity(double r, double alpha) {
    if (!(alpha > 0.0)) throw InvalidArgument("fidelity: alpha must be positive");
    const double a2 = alpha * alpha;
    const double c = std::cosh(r);
    return 2.0 * a2 * std::exp(-a2 * (std::tanh(r) + 1.0)) / (c * c * c * -std::expm1(-2.0 * a2));
}

double optimal_r(double alpha) {
    if (!(alpha > 0.0)) throw InvalidArgument("optimal_r: alpha must be positive");
    const double a4 = alpha * alpha * alpha * alpha;
    const double cosh2 = 0.5 + std::sqrt(9.0 + 4.0 * a4) / 6.0;
    return -std::acosh(std::sqrt(cosh2));
}

ScsApprox best_approximation(double alpha) {
    const double r = optimal_r(alpha);
    return {alpha, r, fidelity(r, alpha)};
}

std::vector<ScsApprox> max_fidelity_curve(const std::vector<double> &alphas) {
    std::vector<ScsApprox> out;
    out.reserve(alphas.size());
    for (double a : alphas) out.push_back(best_approximation(a));
    return out;
}

}  // namespace cvbell
