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

// Scenario configuration, parameter sweeps and CSV output.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cvbell/bell.hpp"
#include "cvbell/state_model.hpp"
#include "cvbell/two_mode.hpp"

namespace cvbell {

enum class Family { Vacuum, Psgs, Scs, Kim, Lossy };
enum class Quantity { Chsh, Ch, Fidelity };
enum class SweepAxis { Alpha, T, Epsilon, Pm, VarianceScale };
/// How variance_scale s acts on (A, B): (s A, s B) or (A + s - 1, B + s - 1).
enum class VarianceScaling { Multiplicative, Additive };

const char *to_string(Family f);
const char *to_string(Quantity q);
const char *to_string(SweepAxis a);
const char *to_string(VarianceScaling v);

struct Scenario {
    std::string name = "scenario";
    Family family = Family::Psgs;
    Quantity quantity = Quantity::Chsh;
    SweepAxis axis = SweepAxis::Alpha;
    std::vector<double> grid;

    double alpha = 1.0;
    std::optional<double> r;  // psgs: defaults to the best cat approximation at alpha
    double T = 0.9;
    double epsilon = 1.0;
    double pm = 1.0;
    /// Input variances for kim; defaults to the pure squeezed vacuum at r.
    std::optional<GaussianVariances> variances;
    double variance_scale = 1.0;
    VarianceScaling scaling = VarianceScaling::Multiplicative;

    OptimizerOptions optimizer;
    std::string output;

    /// Throws ConfigError on an inconsistent scenario.
    void validate() const;
    /// The single-mode state at one axis value.
    StateModel state_at(double x) const;
    /// The two-mode function the Bell functional is evaluated on.
    TwoModeQuasiprob two_mode_at(double x) const;
};

struct SweepRow {
    double axis = 0.0;
    double bell = 0.0;  // F for fidelity scenarios
    std::optional<double> p_success;
    DisplacementSet argmax;
    bool converged = true;
};

/// Parses "start:stop:step" (inclusive) or a comma separated list.
std::vector<double> parse_grid(const std::string &text);

/// INI-style file, one [section] per scenario. Unknown keys are errors.
std::vector<Scenario> load_config(const std::string &path);
std::vector<Scenario> parse_config(const std::string &text);

SweepRow evaluate_row(const Scenario &s, double x);

struct RunOptions {
    int jobs = 1;
    /// Skip axis values already present in the output file.
    bool resume = true;
    /// Called after each row is committed, in axis order.
    std::function<void(const SweepRow &)> on_row;
};

/// One row per grid value, in grid order. Writes s.output (if non-empty)
/// incrementally; the final file is identical to an uninterrupted run.
std::vector<SweepRow> run_scenario(const Scenario &s, const RunOptions &opts = {});

std::string csv_header(Quantity q);
std::string csv_line(const SweepRow &row, Quantity q);
std::string format_number(double v);
void emit_csv(const std::vector<SweepRow> &rows, const std::string &path, Quantity q = Quantity::Chsh);
/// Inverse of emit_csv.
std::vector<SweepRow> read_csv(const std::string &path, Quantity q = Quantity::Chsh);

/// Preset scenarios, one per figure panel (1..7). variant "" picks
/// the first one listed by figure_variants(n).
Scenario figure(int n, const std::string &variant = "");
std::vector<std::string> figure_variants(int n);

}  // namespace cvbell
