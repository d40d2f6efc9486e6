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

// Real orthogonal networks as meshes of nearest-neighbour beam splitters
// V2(eta) = [[eta, -sqrt(1 - eta^2)], [sqrt(1 - eta^2), eta]] and single-mode
// pi phase shifts.

#ifndef SCATMET_DECOMP_H
#define SCATMET_DECOMP_H

#include <string>
#include <variant>
#include <vector>

#include "scatmet/linalg.h"

namespace scatmet {

/// V2(eta) on modes (mode, mode + 1), 0-based.
struct Rotation {
    int mode;
    double eta;
};

/// Multiplies mode `mode` by -1.
struct SignFlip {
    int mode;
};

using Element = std::variant<Rotation, SignFlip>;

/// Elements in the order light meets them: the network is E_N ... E_2 E_1.
using ElementList = std::vector<Element>;

/// Rectangular nulling order with real Givens rotations. Throws NotOrthogonal
/// when |T Tᵀ - I| exceeds `tolerance`.
ElementList decompose_orthogonal(const RealMatrix &t, double tolerance = 1e-10);

/// Throws DomainError on a mode index outside [0, m).
RealMatrix reconstruct(const ElementList &elements, int m);

int rotation_count(const ElementList &elements);

/// Sorted eta values of the rotations, rounded to 4 decimals.
std::vector<double> reflectivity_report(const ElementList &elements);

/// [{"type":"rotation","modes":[i,j],"eta":...}, {"type":"sign","mode":...}],
/// 1-based modes.
std::string elements_to_json(const ElementList &elements, int indent = 2);
ElementList elements_from_json(const std::string &text);

/// One line per element, e.g. "V2(0.632456) modes 2-3" or "pi mode 4".
std::string circuit_listing(const ElementList &elements);

}  // namespace scatmet

#endif
