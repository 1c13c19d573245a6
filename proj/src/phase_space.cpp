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

#include "cvbell/phase_space.hpp"

#include "cvbell/error.hpp"

namespace cvbell {

const char *to_string(Ordering j) { return j == Ordering::Wigner ? "wigner" : "q"; }

double GaussianAtom::integral() const {
    if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("GaussianAtom::integral: atom is not integrable");
    return coeff * kPi / std::sqrt(a * b) * (p0 + px / (2.0 * a) + py / (2.0 * b));
}

double AtomSum::integral() const {
    double s = 0.0;
    for (const auto &at : atoms_) s += at.integral();
    return s;
}

AtomSum AtomSum::scaled(double k) const {
    std::vector<GaussianAtom> out = atoms_;
    for (auto &at : out) at.coeff *= k;
    return AtomSum(std::move(out));
}

AtomSum operator+(const AtomSum &l, const AtomSum &r) {
    std::vector<GaussianAtom> out = l.atoms_;
    out.insert(out.end(), r.atoms_.begin(), r.atoms_.end());
    return AtomSum(std::move(out));
}

AtomSum to_quasiprob(const AtomSum &characteristic, Ordering j) {
    // exp(eta* z - eta z*) = exp(2i(eta_r z_i - eta_i z_r)): eta_r pairs
    // with z_i and eta_i with z_r.
    //   \int exp(2iut - a t^2) dt     = sqrt(pi/a) exp(-u^2/a)
    //   \int t^2 exp(2iut - a t^2) dt = sqrt(pi/a) exp(-u^2/a) (1/(2a) - u^2/a^2)
    const double s = static_cast<double>(ordering_index(j));
    std::vector<GaussianAtom> out;
    out.reserve(characteristic.atoms().size());
    for (const auto &c : characteristic.atoms()) {
        const double a = c.a - 0.5 * s;
        const double b = c.b - 0.5 * s;
        if (!(a > 0.0) || !(b > 0.0))
            throw InvalidArgument("to_quasiprob: characteristic atom is not integrable");
        GaussianAtom q;
        q.coeff = c.coeff / (kPi * std::sqrt(a * b));
        q.a = 1.0 / b;
        q.b = 1.0 / a;
        q.p0 = c.p0 + c.px / (2.0 * a) + c.py / (2.0 * b);
        q.px = -c.py / (b * b);
        q.py = -c.px / (a * a);
        out.push_back(q);
    }
    return AtomSum(std::move(out));
}

AtomSum after_half_transmission(const AtomSum &characteristic) {
    std::vector<GaussianAtom> out = characteristic.atoms();
    for (auto &at : out) {
        at.a = 0.5 * at.a + 0.25;
        at.b = 0.5 * at.b + 0.25;
        at.px *= 0.5;
        at.py *= 0.5;
    }
    return AtomSum(std::move(out));
}

AtomSum vacuum_characteristic() { return AtomSum{GaussianAtom{1.0, 0.5, 0.5, 1.0, 0.0, 0.0}}; }

}  // namespace cvbell
