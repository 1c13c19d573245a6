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

#include <string>
#include <vector>

namespace cvbell {

struct OracleCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Compares every closed-form quasiprobability, marginal and click
/// probability with the truncated Fock-space construction, and checks
/// normalisation. cutoff applies to single-mode states; two-mode checks
/// use cutoff / 2 per mode.
std::vector<OracleCheck> run_oracle_suite(int cutoff = 40);

/// Fixed-width pass/fail table.
std::string format_oracle_table(const std::vector<OracleCheck> &checks);

}  // namespace cvbell
