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

#include "cvbell/state_model.hpp"

#include <sstream>

#include "cvbell/error.hpp"

namespace cvbell {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string &what) {
    if (!ok) throw InvalidArgument(what);
}

}  // namespace

void StateModel::validate() const {
    std::visit(overloaded{
                   [](const model::Vacuum &) {},
                   [](const model::Scs &s) { require(s.alpha > 0.0 && std::isfinite(s.alpha), "scs: alpha must be > 0"); },
                   [](const model::PurePsgs &s) { require(std::isfinite(s.r), "pure_psgs: r must be finite"); },
                   [](const model::Gaussian &s) { s.variances.validate(); },
                   [](const model::KimConditional &s) {
                       s.variances.validate();
                       require(s.T > 0.0 && s.T < 1.0, "kim: T must lie in (0, 1)");
                   },
                   [](const model::LossyPsgs &s) {
                       require(s.r > 0.0, "lossy: r must be > 0");
                       require(s.T > 0.0 && s.T < 1.0, "lossy: T must lie in (0, 1)");
                       require(s.epsilon > 0.0 && s.epsilon <= 1.0, "lossy: epsilon must lie in (0, 1]");
                   },
                   [](const model::DarkMix &s) {
                       require(s.base && s.reference, "dark_mix: missing component");
                       require(s.pm >= 0.0 && s.pm <= 1.0, "dark_mix: pm must lie in [0, 1]");
                       s.base->validate();
                       s.reference->validate();
                   },
               },
               value);
}

std::string StateModel::describe() const {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const model::Vacuum &) { os << "vacuum"; },
                   [&](const model::Scs &s) {
                       os << (s.parity == Parity::Odd ? "odd" : "even") << " scs(alpha=" << s.alpha << ")";
                   },
                   [&](const model::PurePsgs &s) { os << "pure psgs(r=" << s.r << ")"; },
                   [&](const model::Gaussian &s) { os << "gaussian(A=" << s.variances.A << ", B=" << s.variances.B << ")"; },
                   [&](const model::KimConditional &s) {
                       os << "kim(A=" << s.variances.A << ", B=" << s.variances.B << ", T=" << s.T << ")";
                   },
                   [&](const model::LossyPsgs &s) {
                       os << "lossy(r=" << s.r << ", T=" << s.T << ", eps=" << s.epsilon << ")";
                   },
                   [&](const model::DarkMix &s) {
                       os << "mix(pm=" << s.pm << ", " << s.base->describe() << ", " << s.reference->describe() << ")";
                   },
               },
               value);
    return os.str();
}

StateModel lossy_with_dark_counts(double r, double T, double epsilon, double pm) {
    return model::DarkMix{std::make_shared<const StateModel>(model::LossyPsgs{r, T, epsilon}),
                          std::make_shared<const StateModel>(model::Gaussian{lossy_transmitted_variances(r, T)}), pm};
}

std::optional<double> success_probability(const StateModel &m) {
    return std::visit(overloaded{
                          [](const model::KimConditional &s) -> std::optional<double> {
                              return success_prob_ideal(s.variances, s.T);
                          },
                          [](const model::LossyPsgs &s) -> std::optional<double> {
                              return success_prob_lossy(s.r, s.T, s.epsilon);
                          },
                          [](const model::DarkMix &s) -> std::optional<double> { return success_probability(*s.base); },
                          [](const auto &) -> std::optional<double> { return std::nullopt; },
                      },
                      m.value);
}

SingleModeState::SingleModeState(AtomSum characteristic) : repr_(std::move(characteristic)) {}
SingleModeState::SingleModeState(CatState cat) : repr_(cat) {}

SingleModeState SingleModeState::from_model(const StateModel &m) {
    m.validate();
    return std::visit(
        overloaded{
            [](const model::Vacuum &) { return SingleModeState(vacuum_characteristic()); },
            [](const model::Scs &s) { return SingleModeState(CatState{s.alpha, s.parity, 1.0}); },
            [](const model::PurePsgs &s) { return SingleModeState(characteristic_pure_psgs(s.r)); },
            [](const model::Gaussian &s) { return SingleModeState(characteristic_gaussian(s.variances)); },
            [](const model::KimConditional &s) {
                return SingleModeState(characteristic_kim_conditional(s.variances, s.T));
            },
            [](const model::LossyPsgs &s) { return SingleModeState(characteristic_lossy(s.r, s.T, s.epsilon)); },
            [](const model::DarkMix &s) {
                const auto base = from_model(*s.base);
                const auto ref = from_model(*s.reference);
                if (!base.characteristic() || !ref.characteristic())
                    throw InvalidArgument("dark_mix: components must be Gaussian-atom states");
                return SingleModeState(base.characteristic()->scaled(s.pm) +
                                       ref.characteristic()->scaled(1.0 - s.pm));
            },
        },
        m.value);
}

double SingleModeState::quasiprob(Ordering j, PhasePoint z) const { return function(j)(z); }

SingleModeFunction SingleModeState::function(Ordering j) const {
    if (const auto *chi = characteristic()) {
        return [q = to_quasiprob(*chi, j)](PhasePoint z) { return q(z); };
    }
    return [c = *cat(), j](PhasePoint z) { return c.quasiprob(j, z); };
}

SingleModeState SingleModeState::after_half_transmission() const {
    if (const auto *chi = characteristic()) return SingleModeState(cvbell::after_half_transmission(*chi));
    return SingleModeState(cat()->after_half_transmission());
}

}  // namespace cvbell
