// Copyright 2026 The scatmet Authors
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

// Invariant suites behind `scatmet verify`.

#ifndef SCATMET_VERIFY_H
#define SCATMET_VERIFY_H

#include <string>
#include <string_view>
#include <vector>

#include "scatmet/linalg.h"

namespace scatmet {

struct Check {
    std::string name;
    double value;      // observed deviation (or count of failures)
    double threshold;  // pass when value <= threshold
    bool pass;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
};

/// Orthogonality and block-structure checks of a candidate T_m. Exposed so a
/// corrupted matrix can be fed in.
std::vector<Check> symmetrizer_checks(const RealMatrix &t, int m);

/// suite in {netbuild, qfi, fock, scattershot, all}; DomainError otherwise.
std::vector<SuiteReport> run_verify(std::string_view suite);

std::string verify_report_json(const std::vector<SuiteReport> &reports);

}  // namespace scatmet

#endif
