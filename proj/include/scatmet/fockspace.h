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

// Fock-space verification engine: the full second-quantized QFI, permanent
// based transition amplitudes and classical Fisher information of the
// "input equals output" measurement.

#ifndef SCATMET_FOCKSPACE_H
#define SCATMET_FOCKSPACE_H

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Sparse>

#include "scatmet/linalg.h"
#include "scatmet/netbuild.h"
#include "scatmet/occupation.h"

namespace scatmet {

constexpr std::size_t kMaxFockStates = 1000000;
constexpr int kMaxPermanentSize = 24;
constexpr int kMaxAmplitudePhotons = 12;

/// All occupations of `modes` modes with exactly `photons` photons, in
/// lexicographic order of the count vector (|0..0n> first, |n0..0> last).
class FockBasis {
   public:
    FockBasis(int modes, int photons);

    /// C(n + m - 1, n) without building the basis. Saturates at UINT64_MAX.
    static std::uint64_t dimension(int modes, int photons);

    int modes() const noexcept {
        return modes_;
    }
    int photons() const noexcept {
        return photons_;
    }
    std::size_t size() const noexcept {
        return size_;
    }

    std::size_t index(const OccupationVector &v) const;
    std::size_t index(const int *counts) const;
    OccupationVector state(std::size_t index) const;
    /// Dense counts of state `index`, unranked into `out` (length m).
    void unrank(std::size_t index, int *out) const;

   private:
    // ways_[k * (n + 1) + r]: number of ways to place r photons in k modes.
    std::uint64_t ways(int k, int r) const {
        return ways_[static_cast<std::size_t>(k) * (photons_ + 1) + r];
    }

    int modes_;
    int photons_;
    std::size_t size_;
    std::vector<std::uint64_t> ways_;
};

using SparseOperator = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// H = sum_jk h_jk a_j† a_k restricted to `basis`.
SparseOperator second_quantize(const ComplexMatrix &h, const FockBasis &basis);

struct QfiOracleResult {
    double full;      // 4 (<H^2> - <H>^2) on the Fock basis
    double analytic;  // product-state reduction 4 sum_{j!=k} |h_jk|^2 n_j (n_k + 1)
};

/// Both routes. The full route throws TooLarge past kMaxFockStates.
QfiOracleResult qfi_oracle(const ComplexMatrix &h, const OccupationVector &input);
/// Analytic route alone; works for any m.
double qfi_oracle_analytic(const ComplexMatrix &h, const OccupationVector &input);

/// Ryser's formula with Gray-code updates, O(2^n n).
Complex permanent(const ComplexMatrix &a);

/// <output| U |input> for a linear network whose column j is the image of
/// input mode j. Repeated rows/columns encode multiple occupancy.
Complex transition_amplitude(const ComplexMatrix &u, const OccupationVector &input, const OccupationVector &output);

struct Outcome {
    OccupationVector state;
    double probability;
};

/// Every output of the basis with its probability, in basis order.
std::vector<Outcome> outcome_distribution(const ComplexMatrix &u, const OccupationVector &input);

using UnitaryFamily = std::function<ComplexMatrix(double)>;

UnitaryFamily family_of(NetworkKind kind, int m);

constexpr double kFiniteDifferenceStep = 1e-4;

/// Amplitude p(phi) = <n|U(phi)|n>. Throws DomainError when it is not real.
double equal_amplitude(const UnitaryFamily &family, const OccupationVector &input, double phi);

/// 4 p'^2 / (1 - p^2) for the two-outcome "input = output" measurement.
/// Throws LimitPoint when |p| = 1.
double binary_measurement_fisher(const UnitaryFamily &family, const OccupationVector &input, double phi,
                                 double delta = kFiniteDifferenceStep);

/// sum_o P_o'^2 / P_o over the full photon-counting distribution.
double full_distribution_fisher(const UnitaryFamily &family, const OccupationVector &input, double phi,
                                double delta = kFiniteDifferenceStep);

/// Richardson estimate of lim_{phi->0} f(phi) from f(1e-2) and f(5e-3),
/// assuming f(phi) = f0 + c phi^2 + O(phi^4).
double limit_at_zero(const std::function<double(double)> &f, double phi1 = 1e-2, double phi2 = 5e-3);

struct AmplitudeExpansion {
    int n = 0;
    /// coefficients[j] multiplies c^{n-2j} s^{2j}, c = cos(phi/2),
    /// s = sin(phi/2) / sqrt(m-1).
    std::vector<double> coefficients;
    double residual = 0.0;
};

/// Least-squares fit of <n|Y_sym(phi)|n> over a phi grid for a 0/1 input.
AmplitudeExpansion amplitude_expansion_check(int m, const OccupationVector &input);

/// Largest |Per| of the off-diagonal part of random d x d principal
/// submatrices of Y_16^(sym)(phi) with random phi. d must be odd.
double odd_skew_permanent_check(int d, int trials, std::uint64_t seed = 1);

/// Max spread of the full-route QFI on generator(sym, m) over all input-mode
/// permutations of `input` (m <= 8).
double permutation_qfi_invariance(const OccupationVector &input);

struct MeasurementCurve {
    std::vector<double> phi;
    std::vector<double> p_equal;  // probability |<n|U|n>|^2
    std::vector<double> fisher_binary;
    std::vector<double> fisher_full;
    std::vector<double> qfi;
};

MeasurementCurve measurement_curve(NetworkKind kind, const OccupationVector &input, const std::vector<double> &phis);

}  // namespace scatmet

#endif
