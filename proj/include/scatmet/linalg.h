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

#ifndef SCATMET_LINALG_H
#define SCATMET_LINALG_H

#include <complex>

#include <Eigen/Dense>

namespace scatmet {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

struct Tolerances {
    double unit = 1e-10;
    double exp = 1e-10;
};

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const RealMatrix &a, const RealMatrix &b);

/// max |U U† - I|
double unitarity_error(const ComplexMatrix &u);
/// max |T Tᵀ - I|
double orthogonality_error(const RealMatrix &t);
/// max |h - h†|
double hermiticity_error(const ComplexMatrix &h);

/// exp(-i t h) for Hermitian h via the eigendecomposition h = V Λ V†.
ComplexMatrix expm_hermitian(const ComplexMatrix &h, double t);

/// Block-diagonal stack of `copies` copies of `block`.
ComplexMatrix direct_sum(const ComplexMatrix &block, int copies);

}  // namespace scatmet

#endif
