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

#include "oracles.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> simpson_weights(int n, double h) {
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    for (auto &x : w) x *= h / 3.0;
    return w;
}

}  // namespace

double simpson_plane(const Fn2 &f, double L, int n) {
    if (n % 2) throw std::invalid_argument("simpson_plane: n must be even");
    const double h = 2.0 * L / n;
    const auto w = simpson_weights(n, h);
    double s = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) s += w[i] * w[j] * f(-L + i * h, -L + j * h);
    return s;
}

double fourier_quasiprob(const Fn2 &chi, int s, double zr, double zi, double L, int n) {
    const auto g = [&](double er, double ei) {
        return std::cos(2.0 * (er * zi - ei * zr)) * chi(er, ei) * std::exp(0.5 * s * (er * er + ei * ei));
    };
    return simpson_plane(g, L, n) / (kPi * kPi);
}

double fock_fidelity(double r, double alpha, int cutoff) {
    // S(r)|1> = sum_n (-tanh r)^n sqrt((2n+1)!) / (cosh^{3/2} r 2^n n!) |2n+1>,
    // built by the ratio of consecutive terms.
    // Odd cat: N (|a> - |-a>) has amplitude 2 N e^{-a^2/2} a^k / sqrt(k!) on odd k.
    const double t = -std::tanh(r);
    const double norm_cat = 1.0 / std::sqrt(2.0 * (1.0 - std::exp(-2.0 * alpha * alpha)));
    double c = std::pow(std::cosh(r), -1.5);                              // n = 0 term of the squeezed photon
    double a = 2.0 * norm_cat * std::exp(-0.5 * alpha * alpha) * alpha;  // k = 1 cat amplitude
    double overlap = 0.0;
    for (int n = 0; 2 * n + 1 <= cutoff; ++n) {
        overlap += c * a;
        const int k = 2 * n + 1;
        // (2n+3)!/(2n+1)! = (2n+2)(2n+3); 2^{n+1}(n+1)! / (2^n n!) = 2(n+1)
        c *= t * std::sqrt(double(k + 1) * double(k + 2)) / (2.0 * (n + 1));
        a *= alpha * alpha / std::sqrt(double(k + 1) * double(k + 2));
    }
    return overlap * overlap;
}

double Heralded::operator()(int s, double zr, double zi) const {
    const double add = s == -1 ? 0.25 : 0.0;
    const auto gauss = [&](const double *v) {
        const double vr = v[0] + add, vi = v[1] + add;
        return std::exp(-zr * zr / (2.0 * vr) - zi * zi / (2.0 * vi)) / (2.0 * kPi * std::sqrt(vr * vi));
    };
    return (gauss(total_var) - noclick_prob * gauss(noclick_var)) / click_prob;
}

Heralded herald_gaussian(double var_r, double var_i, double T, double eps) {
    // Wigner covariance of the two outputs, ordered (x1, y1, x2, y2).
    const double R = 1.0 - T;
    const double vac = 0.25;
    const double k = std::sqrt(T * R);
    Eigen::Matrix4d V = Eigen::Matrix4d::Zero();
    V(0, 0) = T * var_r + R * vac;
    V(1, 1) = T * var_i + R * vac;
    V(2, 2) = R * var_r + T * vac;
    V(3, 3) = R * var_i + T * vac;
    V(0, 2) = V(2, 0) = k * (var_r - vac);
    V(1, 3) = V(3, 1) = k * (var_i - vac);

    // Weyl symbol of (1 - eps)^n: 2/(2 - eps) exp(-2 eps/(2 - eps) |z|^2).
    const double kappa = 4.0 * eps / (2.0 - eps);
    Eigen::Matrix4d K = Eigen::Matrix4d::Zero();
    K(2, 2) = K(3, 3) = kappa;
    const Eigen::Matrix4d M = Eigen::Matrix4d::Identity() + V * K;
    const double p_nc = 2.0 / (2.0 - eps) / std::sqrt(M.determinant());

    // Conditional covariance of mode 1 under W(z) exp(-z2 K z2 / 2).
    const Eigen::Matrix4d P = V.inverse() + K;
    const Eigen::Matrix2d S = P.inverse().topLeftCorner<2, 2>();

    Heralded h{};
    h.total_var[0] = V(0, 0);
    h.total_var[1] = V(1, 1);
    h.noclick_var[0] = S(0, 0);
    h.noclick_var[1] = S(1, 1);
    h.noclick_prob = p_nc;
    h.click_prob = 1.0 - p_nc;
    return h;
}

}  // namespace oracle
