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

#include "cvbell/quasiprob.hpp"

#include <string>

#include "cvbell/error.hpp"

namespace cvbell {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) throw InvalidArgument(what);
}

double sign_of(Parity p) { return p == Parity::Even ? 1.0 : -1.0; }

}  // namespace

void GaussianVariances::validate() const {
    require(std::isfinite(A) && std::isfinite(B) && A > 0.0 && B > 0.0,
            "GaussianVariances: A and B must be positive");
    require(A * B >= 1.0 - 1e-12, "GaussianVariances: A*B < 1 violates the uncertainty relation");
}

GaussianVariances GaussianVariances::squeezed_vacuum(double r) { return {std::exp(2.0 * r), std::exp(-2.0 * r)}; }

GaussianVariances GaussianVariances::from_db(double a_db, double b_db) {
    return {db_to_variance(a_db), db_to_variance(b_db)};
}

double db_to_variance(double db) { return std::pow(10.0, db / 10.0); }

std::array<std::array<double, 4>, 4> CorrelationMatrix::matrix() const {
    return {{{n1, 0.0, c1, 0.0}, {0.0, n2, 0.0, c2}, {c1, 0.0, m1, 0.0}, {0.0, c2, 0.0, m2}}};
}

CorrelationMatrix correlation_matrix(const GaussianVariances &v, double T) {
    require(T > 0.0 && T < 1.0, "correlation_matrix: T must lie in (0, 1)");
    v.validate();
    const double R = 1.0 - T;
    const double tr = std::sqrt(T * R);
    return {T * v.A + R, T * v.B + R, tr * (v.A - 1.0), tr * (v.B - 1.0), R * v.A + T, R * v.B + T};
}

double wigner_vacuum(PhasePoint z) { return 2.0 / kPi * std::exp(-2.0 * z.norm2()); }

double q_vacuum(PhasePoint z) { return std::exp(-z.norm2()) / kPi; }

double CatState::quasiprob(Ordering j, PhasePoint z) const {
    const double g = amplitude;
    const double s = sign_of(parity);
    const double n2 = 1.0 / (2.0 * (1.0 + s * coherence * std::exp(-2.0 * g * g)));
    const double dm = (z.re - g) * (z.re - g) + z.im * z.im;
    const double dp = (z.re + g) * (z.re + g) + z.im * z.im;
    if (j == Ordering::Wigner) {
        return n2 * 2.0 / kPi *
               (std::exp(-2.0 * dm) + std::exp(-2.0 * dp) +
                2.0 * s * coherence * std::exp(-2.0 * z.norm2()) * std::cos(4.0 * g * z.im));
    }
    return n2 / kPi *
           (std::exp(-dm) + std::exp(-dp) +
            2.0 * s * coherence * std::exp(-z.norm2() - g * g) * std::cos(2.0 * g * z.im));
}

CatState CatState::after_half_transmission() const {
    // The lost arm carries |+-g/sqrt2>; their overlap e^{-g^2} damps the coherences.
    return {amplitude / std::sqrt(2.0), parity, coherence * std::exp(-amplitude * amplitude)};
}

double wigner_scs(double alpha, Parity parity, PhasePoint z) {
    require(alpha > 0.0, "wigner_scs: alpha must be positive");
    const double e = std::exp(-2.0 * alpha * alpha);
    const double s = sign_of(parity);
    return std::exp(-2.0 * z.norm2()) / (kPi * (1.0 + s * e)) *
           (e * (std::exp(-4.0 * alpha * z.re) + std::exp(4.0 * alpha * z.re)) + 2.0 * s * std::cos(4.0 * alpha * z.im));
}

double q_scs(double alpha, Parity parity, PhasePoint z) {
    require(alpha > 0.0, "q_scs: alpha must be positive");
    return CatState{alpha, parity, 1.0}.quasiprob(Ordering::Q, z);
}

double char_pure_psgs(double r, PhasePoint eta) {
    const double u = std::exp(2.0 * r) * eta.re * eta.re;
    const double v = std::exp(-2.0 * r) * eta.im * eta.im;
    return std::exp(-0.5 * (u + v)) * (1.0 - u - v);
}

double wigner_pure_psgs(double r, PhasePoint z) {
    const double u = std::exp(2.0 * r) * z.re * z.re;
    const double v = std::exp(-2.0 * r) * z.im * z.im;
    return 2.0 / kPi * std::exp(-2.0 * (u + v)) * (4.0 * u + 4.0 * v - 1.0);
}

AtomSum characteristic_pure_psgs(double r) {
    const double ep = std::exp(2.0 * r);
    const double em = std::exp(-2.0 * r);
    return AtomSum{GaussianAtom{1.0, 0.5 * ep, 0.5 * em, 1.0, -ep, -em}};
}

AtomSum characteristic_gaussian(const GaussianVariances &v) {
    v.validate();
    return AtomSum{GaussianAtom{1.0, 0.5 * v.A, 0.5 * v.B, 1.0, 0.0, 0.0}};
}

double success_prob_ideal(const GaussianVariances &v, double T) {
    require(T > 0.0 && T <= 1.0, "success_prob_ideal: T must lie in (0, 1]");
    v.validate();
    const double R = 1.0 - T;
    const double m1 = R * v.A + T;
    const double m2 = R * v.B + T;
    return 1.0 - 2.0 / std::sqrt((1.0 + m1) * (1.0 + m2));
}

AtomSum characteristic_kim_conditional(const GaussianVariances &v, double T) {
    require(T > 0.0 && T < 1.0, "kim conditional: T must lie in (0, 1)");
    v.validate();
    if (T > kMaxConditioningTransmittivity)
        throw ZeroProbabilityError("kim conditional: T too close to 1, the click probability vanishes");
    const double ps = success_prob_ideal(v, T);
    if (!(ps > 1e-12)) throw ZeroProbabilityError("kim conditional: zero-probability conditioning (P_s <= 1e-12)");

    const auto cm = correlation_matrix(v, T);
    const double root = std::sqrt((cm.m1 + 1.0) * (cm.m2 + 1.0));
    const double norm = root / (root - 2.0);
    const GaussianAtom total{norm, 0.5 * cm.n1, 0.5 * cm.n2, 1.0, 0.0, 0.0};
    const GaussianAtom no_click{-norm * 2.0 / root, 0.5 * cm.n1 - cm.c1 * cm.c1 / (2.0 * (cm.m1 + 1.0)),
                                0.5 * cm.n2 - cm.c2 * cm.c2 / (2.0 * (cm.m2 + 1.0)), 1.0, 0.0, 0.0};
    return AtomSum{total, no_click};
}

double char_kim_conditional(const GaussianVariances &v, double T, PhasePoint zeta) {
    return characteristic_kim_conditional(v, T)(zeta);
}

LossyParameters lossy_parameters(double r, double T, double epsilon) {
    require(T > 0.0 && T < 1.0, "lossy model: T must lie in (0, 1)");
    require(epsilon > 0.0 && epsilon <= 1.0, "lossy model: epsilon must lie in (0, 1]");
    require(r > 0.0 && std::isfinite(r), "lossy model: r must be positive");

    const double t = T;
    const double sh = std::sinh(r);
    const double ch = std::cosh(r);
    const double q = 1.0 - epsilon * (1.0 - t);

    LossyParameters p{};
    p.a1_plus = 0.5 * (1.0 + (std::exp(2.0 * r) - 1.0) * t);
    p.a1_minus = 0.5 * (1.0 + (std::exp(-2.0 * r) - 1.0) * t);
    p.a2_plus = 0.5 + t * sh / (ch - q * sh);
    p.a2_minus = 0.5 - t * sh / (ch + q * sh);
    p.h_plus = 0.5 * (std::exp(2.0 * r) * (1.0 - t) + t);
    p.h_minus = 0.5 * (std::exp(-2.0 * r) * (1.0 - t) + t);
    p.sigma_m = (2.0 - epsilon) / (2.0 * epsilon);
    p.no_click_prob = 1.0 / (epsilon * std::sqrt((p.h_plus + p.sigma_m) * (p.h_minus + p.sigma_m)));
    if (!(1.0 - p.no_click_prob > 1e-12))
        throw ZeroProbabilityError("lossy model: zero-probability conditioning");
    p.normalization = 1.0 / (1.0 - p.no_click_prob);
    return p;
}

namespace {

// G_k(z) with A_k = (a+ + a-)/2, B_k = (a- - a+)/4.
double gaussian_component(double a_plus, double a_minus, Ordering j, PhasePoint z) {
    const double big_a = 0.5 * (a_plus + a_minus);
    const double big_b = 0.25 * (a_minus - a_plus);
    const double s = 2.0 * big_a - static_cast<double>(ordering_index(j));
    const double det = s * s - 16.0 * big_b * big_b;
    const double z2_plus_conj = 2.0 * (z.re * z.re - z.im * z.im);  // z^2 + z*^2
    return 2.0 * std::exp(-(2.0 * s * z.norm2() + 4.0 * big_b * z2_plus_conj) / det) / (kPi * std::sqrt(det));
}

}  // namespace

double quasiprob_lossy(double r, double T, double epsilon, Ordering j, PhasePoint z) {
    const auto p = lossy_parameters(r, T, epsilon);
    return p.normalization * (gaussian_component(p.a1_plus, p.a1_minus, j, z) -
                              p.no_click_prob * gaussian_component(p.a2_plus, p.a2_minus, j, z));
}

double success_prob_lossy(double r, double T, double epsilon) {
    return 1.0 - lossy_parameters(r, T, epsilon).no_click_prob;
}

AtomSum characteristic_lossy(double r, double T, double epsilon) {
    const auto p = lossy_parameters(r, T, epsilon);
    // A Gaussian with z-variances (a+, a-)/2 has characteristic function
    // exp(-a- eta_r^2 - a+ eta_i^2).
    return AtomSum{GaussianAtom{p.normalization, p.a1_minus, p.a1_plus, 1.0, 0.0, 0.0},
                   GaussianAtom{-p.normalization * p.no_click_prob, p.a2_minus, p.a2_plus, 1.0, 0.0, 0.0}};
}

GaussianVariances lossy_transmitted_variances(double r, double T) {
    const auto p = lossy_parameters(r, T, 1.0);
    return {2.0 * p.a1_minus, 2.0 * p.a1_plus};
}

double mix_dark(double pm, const SingleModeFunction &w_sub, const SingleModeFunction &w_sq, PhasePoint z) {
    require(pm >= 0.0 && pm <= 1.0, "mix_dark: pm must lie in [0, 1]");
    return pm * w_sub(z) + (1.0 - pm) * w_sq(z);
}

}  // namespace cvbell
