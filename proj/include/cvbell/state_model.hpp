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

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "cvbell/quasiprob.hpp"

namespace cvbell {

struct StateModel;

namespace model {

struct Vacuum {};
struct Scs {
    double alpha = 1.0;
    Parity parity = Parity::Odd;
};
/// Squeezed single photon S(r)|1>.
struct PurePsgs {
    double r = 0.0;
};
/// Squeezed thermal state with the given variances.
struct Gaussian {
    GaussianVariances variances;
};
/// Photon subtraction from a (possibly mixed) Gaussian, ideal on/off detector.
struct KimConditional {
    GaussianVariances variances;
    double T = 0.9;
};
/// Photon subtraction from a pure squeezed vacuum, detector efficiency epsilon.
struct LossyPsgs {
    double r = 0.3;
    double T = 0.9;
    double epsilon = 1.0;
};
/// pm * base + (1 - pm) * reference.
struct DarkMix {
    std::shared_ptr<const StateModel> base;
    std::shared_ptr<const StateModel> reference;
    double pm = 1.0;
};

}  // namespace model

struct StateModel {
    using Variant = std::variant<model::Vacuum, model::Scs, model::PurePsgs, model::Gaussian, model::KimConditional,
                                 model::LossyPsgs, model::DarkMix>;
    Variant value;

    template <typename T>
    StateModel(T v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    /// Throws InvalidArgument when a parameter is outside its range.
    void validate() const;
    std::string describe() const;
};

/// Lossy photon subtraction diluted by dark counts; the reference is the
/// transmitted squeezed state that a dark-count herald leaves behind.
StateModel lossy_with_dark_counts(double r, double T, double epsilon, double pm);

/// Click probability of the heralding detector, when the model has one.
std::optional<double> success_probability(const StateModel &m);

/// A single-mode state held in closed form: a characteristic-function atom
/// sum, or a (possibly decohered) cat state.
class SingleModeState {
   public:
    explicit SingleModeState(AtomSum characteristic);
    explicit SingleModeState(CatState cat);
    static SingleModeState from_model(const StateModel &m);

    double quasiprob(Ordering j, PhasePoint z) const;
    /// Fast evaluator with the Fourier transform done once.
    SingleModeFunction function(Ordering j) const;
    SingleModeState after_half_transmission() const;

    /// Characteristic-function atoms, or nullptr for cat states.
    const AtomSum *characteristic() const { return std::get_if<AtomSum>(&repr_); }
    const CatState *cat() const { return std::get_if<CatState>(&repr_); }

   private:
    std::variant<AtomSum, CatState> repr_;
};

}  // namespace cvbell
