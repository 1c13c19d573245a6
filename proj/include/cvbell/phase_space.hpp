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

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <vector>

namespace cvbell {

inline constexpr double kPi = std::numbers::pi;

/// A point of the single-mode phase space, z = re + i im. Coherent states
/// |z> have <a> = z, so the vacuum Wigner function is (2/pi) exp(-2|z|^2).
struct PhasePoint {
    double re = 0.0;
    double im = 0.0;

    double norm2() const { return re * re + im * im; }
    double abs() const { return std::sqrt(norm2()); }
    std::complex<double> complex() const { return {re, im}; }
    bool finite() const { return std::isfinite(re) && std::isfinite(im); }

    friend PhasePoint operator+(PhasePoint a, PhasePoint b) { return {a.re + b.re, a.im + b.im}; }
    friend PhasePoint operator-(PhasePoint a, PhasePoint b) { return {a.re - b.re, a.im - b.im}; }
    friend PhasePoint operator*(double k, PhasePoint a) { return {k * a.re, k * a.im}; }
    friend bool operator==(PhasePoint, PhasePoint) = default;
};

/// Operator ordering of a quasiprobability. The numeric value is the
/// s-parameter: 0 is the symmetric (Wigner) ordering, -1 the antinormal
/// (Husimi Q) ordering.
enum class Ordering : int { Wigner = 0, Q = -1 };

inline int ordering_index(Ordering j) { return static_cast<int>(j); }
const char *to_string(Ordering j);

/// coeff * exp(-a x^2 - b y^2) * (p0 + px x^2 + py y^2).
///
/// Used in two domains: for characteristic functions (x, y) = (eta_r, eta_i),
/// for quasiprobabilities (x, y) = (z_r, z_i).
struct GaussianAtom {
    double coeff = 1.0;
    double a = 0.0;
    double b = 0.0;
    double p0 = 1.0;
    double px = 0.0;
    double py = 0.0;

    double operator()(double x, double y) const {
        return coeff * std::exp(-a * x * x - b * y * y) * (p0 + px * x * x + py * y * y);
    }
    /// Integral over the whole plane; requires a > 0 and b > 0.
    double integral() const;
};

/// A finite sum of Gaussian atoms. Every characteristic function and every
/// quasiprobability of the Gaussian and photon-subtracted families is one
/// of these.
class AtomSum {
   public:
    AtomSum() = default;
    AtomSum(std::initializer_list<GaussianAtom> atoms) : atoms_(atoms) {}
    explicit AtomSum(std::vector<GaussianAtom> atoms) : atoms_(std::move(atoms)) {}

    double operator()(double x, double y) const {
        double s = 0.0;
        for (const auto &at : atoms_) s += at(x, y);
        return s;
    }
    double operator()(PhasePoint p) const { return (*this)(p.re, p.im); }

    double integral() const;
    const std::vector<GaussianAtom> &atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    AtomSum scaled(double k) const;
    friend AtomSum operator+(const AtomSum &l, const AtomSum &r);

   private:
    std::vector<GaussianAtom> atoms_;
};

/// Fourier transform of a characteristic-domain sum into the s-ordered
/// quasiprobability, W_s(z) = pi^-2 \int exp(eta* z - eta z*) chi(eta)
/// exp(s |eta|^2 / 2) d^2 eta, done atom by atom in closed form.
AtomSum to_quasiprob(const AtomSum &characteristic, Ordering j);

/// Characteristic function after a 50:50 beam splitter with vacuum in the
/// other port, i.e. chi(eta / sqrt 2) exp(-|eta|^2 / 4).
AtomSum after_half_transmission(const AtomSum &characteristic);

/// Vacuum characteristic function exp(-|eta|^2 / 2).
AtomSum vacuum_characteristic();

}  // namespace cvbell
