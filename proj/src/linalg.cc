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

#include "scatmet/linalg.h"

#include <Eigen/Eigenvalues>

#include "scatmet/error.h"

namespace scatmet {

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorKind::DomainError, "matrix shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const RealMatrix &a, const RealMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorKind::DomainError, "matrix shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_error(const ComplexMatrix &u) {
    return max_abs_diff(ComplexMatrix(u * u.adjoint()), ComplexMatrix::Identity(u.rows(), u.rows()));
}

double orthogonality_error(const RealMatrix &t) {
    return max_abs_diff(RealMatrix(t * t.transpose()), RealMatrix::Identity(t.rows(), t.rows()));
}

double hermiticity_error(const ComplexMatrix &h) {
    return max_abs_diff(h, ComplexMatrix(h.adjoint()));
}

ComplexMatrix expm_hermitian(const ComplexMatrix &h, double t) {
    if (h.rows() != h.cols()) {
        fail(ErrorKind::DomainError, "expm_hermitian needs a square matrix");
    }
    // Symmetrise first so tiny anti-Hermitian noise cannot leak into the spectrum.
    ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::NumericalError, "eigendecomposition did not converge");
    }
    const auto &values = solver.eigenvalues();
    Eigen::VectorXcd phases(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        phases(k) = std::exp(Complex(0.0, -t * values(k)));
    }
    const ComplexMatrix &v = solver.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

ComplexMatrix direct_sum(const ComplexMatrix &block, int copies) {
    const Eigen::Index b = block.rows();
    ComplexMatrix out = ComplexMatrix::Zero(b * copies, b * copies);
    for (int j = 0; j < copies; ++j) {
        out.block(j * b, j * b, b, b) = block;
    }
    return out;
}

}  // namespace scatmet
