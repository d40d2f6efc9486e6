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

// Interferometer unitaries, symmetrising transforms and their single-particle
// generators.
//
// Conventions:
//   * Mode indices are 0-based internally; mode pairs of the separable stack
//     are (2p, 2p+1).
//   * The reference phase is folded into `phi`. All matrices depend on phi/2.
//   * The phase layer carries e^{+i phi/2} on the first half of the modes and
//     e^{-i phi/2} on the second half.
//   * Generators h are the coefficient matrices of H = sum_jk h_jk a_j† a_k.
//     The scattering matrix is recovered as Y(phi) = exp(+i phi h), which is
//     the same statement as exp(-i phi h) = Y(phi)†.

#ifndef SCATMET_NETBUILD_H
#define SCATMET_NETBUILD_H

#include <string>
#include <string_view>

#include "scatmet/linalg.h"

namespace scatmet {

enum class NetworkKind { mzi, separable, uniform, symmetric };

NetworkKind parse_network_kind(std::string_view text);
std::string_view to_string(NetworkKind kind);

struct NetworkSpec {
    NetworkKind kind = NetworkKind::symmetric;
    int modes = 2;
    double phi = 0.0;

    /// Throws OddModeCount / UnsupportedSize when `modes` does not fit `kind`.
    void validate() const;
};

/// True for m = 2 and for m >= 4 with m/2 a power of two.
bool symmetric_size_supported(int m);
bool is_power_of_two(int n);

ComplexMatrix mzi_unitary(double phi);
ComplexMatrix phase_layer(int m, double phi);
ComplexMatrix qft(int m);
ComplexMatrix separable_unitary(int m, double phi);

/// Closed form of F Z F†.
ComplexMatrix uniform_unitary(int m, double phi);
/// Explicit product qft(m) * phase_layer(m, phi) * qft(m)†.
ComplexMatrix uniform_unitary_product(int m, double phi);

/// Orthogonal skew-symmetric helper with zero diagonal and off-diagonal
/// magnitude 1/sqrt(n-1), built by doubling from the 2x2 seed.
RealMatrix skew_hadamard(int n);

/// 2x2 building blocks of the symmetrising transform for m modes.
RealMatrix symmetrizer_block_a(int m);
RealMatrix symmetrizer_block_b(int m);

/// T_m: A blocks on the block diagonal, ±B blocks elsewhere with the signs of
/// skew_hadamard(m/2).
RealMatrix symmetrizer(int m);

/// Signs S of the symmetric scattering matrix, Y = cos(phi/2) I + sin(phi/2)/sqrt(m-1) S.
/// S is skew-symmetric with zero diagonal and ±1 elsewhere.
Eigen::MatrixXi symmetric_sign_pattern(int m);

/// Closed form of the symmetric interferometer (m = 2 aliases the MZI).
ComplexMatrix symmetric_unitary(int m, double phi);
/// T_m (⊕ Y_2) T_mᵀ evaluated by explicit products.
ComplexMatrix symmetric_unitary_product(int m, double phi);

/// Dispatch on the family.
ComplexMatrix network_unitary(const NetworkSpec &spec);

ComplexMatrix generator(NetworkKind kind, int m);

/// Sylvester-Hadamard conjugated phase layer W Z Wᵀ (m a power of two). This is
/// the separable network with relabelled modes and local phases; see
/// sylvester_mode_map.
ComplexMatrix sylvester_unitary(int m, double phi);
/// Monomial matrix Q with Q† sylvester_unitary(m, phi) Q = separable_unitary(m, phi).
/// Separable mode 2p maps to Sylvester mode p with phase 1, mode 2p+1 maps to
/// mode p + m/2 with phase -i.
ComplexMatrix sylvester_mode_map(int m);

enum class SimilarityVariant { M4, M41, M42 };

/// The signed four-mode permutations used to show input invariance.
RealMatrix similarity_permutation(SimilarityVariant variant);

/// Max deviation of M⁻¹ Y₄(phi) M from Y₄(phi) (M4) or from Y₄(-phi) (M41, M42).
double permutation_similarity_check(SimilarityVariant variant, double phi);

}  // namespace scatmet

#endif
