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

#include "scatmet/netbuild.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "scatmet/error.h"

using namespace scatmet;

namespace {

constexpr double kPi = std::numbers::pi;

const double kPhis[] = {0.0, 0.1, 1.0, kPi, 3.0};

}  // namespace

TEST(netbuild, mzi_unitary) {
    EXPECT_LT(max_abs_diff(mzi_unitary(0), ComplexMatrix::Identity(2, 2)), 1e-15);
    ComplexMatrix expected(2, 2);
    const double r = std::sqrt(0.5);
    expected << r, r, -r, r;
    EXPECT_LT(max_abs_diff(mzi_unitary(kPi / 2), expected), 1e-15);
    expected << 0, 1, -1, 0;
    EXPECT_LT(max_abs_diff(mzi_unitary(kPi), expected), 1e-15);
}

TEST(netbuild, phase_layer) {
    EXPECT_LT(max_abs_diff(phase_layer(2, 0), ComplexMatrix::Identity(2, 2)), 1e-15);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected.diagonal() << Complex(0, 1), Complex(0, 1), Complex(0, -1), Complex(0, -1);
    EXPECT_LT(max_abs_diff(phase_layer(4, kPi), expected), 1e-15);
    EXPECT_LT(unitarity_error(phase_layer(6, 0.4)), 1e-14);
    try {
        phase_layer(5, 0.1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddModeCount);
    }
}

TEST(netbuild, qft) {
    EXPECT_LT(max_abs_diff(qft(1), ComplexMatrix::Identity(1, 1)), 1e-15);
    ComplexMatrix f2(2, 2);
    f2 << 1, 1, 1, -1;
    f2 /= std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(qft(2), f2), 1e-15);
    const ComplexMatrix f8 = qft(8);
    EXPECT_LT(unitarity_error(f8), 1e-12);
    for (int j = 0; j < 8; ++j) {
        for (int k = 0; k < 8; ++k) {
            EXPECT_NEAR(std::abs(f8(j, k)), 1 / std::sqrt(8.0), 1e-15);
        }
    }
}

TEST(netbuild, uniform_closed_form_matches_product) {
    for (int m = 2; m <= 32; m += 2) {
        for (double phi : {0.0, 0.4, 0.7, 2.5}) {
            EXPECT_LT(max_abs_diff(uniform_unitary(m, phi), uniform_unitary_product(m, phi)), 1e-12)
                << "m=" << m << " phi=" << phi;
        }
    }
    EXPECT_LT(max_abs_diff(uniform_unitary(10, 0), ComplexMatrix::Identity(10, 10)), 1e-15);
    EXPECT_THROW(uniform_unitary(3, 0.1), Error);
}

TEST(netbuild, skew_hadamard_small) {
    RealMatrix h2(2, 2);
    h2 << 0, 1, -1, 0;
    EXPECT_LT(max_abs_diff(skew_hadamard(2), h2), 1e-15);

    RealMatrix h4(4, 4);
    h4 << 0, 1, 1, 1,  //
        -1, 0, -1, 1,  //
        -1, 1, 0, -1,  //
        -1, -1, 1, 0;
    h4 /= std::sqrt(3.0);
    EXPECT_LT(max_abs_diff(skew_hadamard(4), h4), 1e-15);
}

TEST(netbuild, skew_hadamard_properties) {
    for (int n = 2; n <= 128; n *= 2) {
        const RealMatrix h = skew_hadamard(n);
        EXPECT_LT(orthogonality_error(h), 1e-12) << n;
        EXPECT_LT(max_abs_diff(h, RealMatrix(-h.transpose())), 1e-15) << n;
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (j == k) {
                    EXPECT_EQ(h(j, k), 0.0);
                } else {
                    EXPECT_NEAR(std::abs(h(j, k)), 1 / std::sqrt(n - 1.0), 1e-14);
                }
            }
        }
    }
    EXPECT_THROW(skew_hadamard(6), Error);
    EXPECT_THROW(skew_hadamard(1), Error);
}

TEST(netbuild, symmetrizer_t4_explicit) {
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);
    const double r6 = std::sqrt(6.0);
    RealMatrix expected(4, 4);
    expected << 0, 1 / r2, 1 / r6, 1 / r3,                            //
        -0.5 + 1 / r6, -1 / (2 * r3), 0.5 + 1 / r6, -1 / (2 * r3),   //
        -1 / r6, -1 / r3, 0, 1 / r2,                                  //
        -0.5 - 1 / r6, 1 / (2 * r3), -0.5 + 1 / r6, -1 / (2 * r3);
    EXPECT_LT(max_abs_diff(symmetrizer(4), expected), 1e-12);
}

TEST(netbuild, symmetrizer_orthogonal_and_block_identities) {
    for (int m = 4; m <= 64; m *= 2) {
        const RealMatrix t = symmetrizer(m);
        EXPECT_LT(orthogonality_error(t), 1e-12) << m;
        const RealMatrix a = symmetrizer_block_a(m);
        const RealMatrix b = symmetrizer_block_b(m);
        const RealMatrix id = RealMatrix::Identity(2, 2);
        EXPECT_LT(max_abs_diff(RealMatrix(a * a.transpose() + (m / 2 - 1) * b * b.transpose()), id), 1e-12);
        // Off-diagonal block rows of T Tᵀ vanish.
        const RealMatrix ttt = t * t.transpose();
        EXPECT_LT(ttt.block(0, 2, 2, m - 2).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_THROW(symmetrizer(2), Error);
    EXPECT_THROW(symmetrizer(12), Error);
}

TEST(netbuild, symmetric_unitary_structure) {
    for (int m = 4; m <= 32; m *= 2) {
        for (double phi : kPhis) {
            const ComplexMatrix y = symmetric_unitary(m, phi);
            const double c = std::cos(phi / 2);
            const double s = std::sin(phi / 2) / std::sqrt(m - 1.0);
            for (int j = 0; j < m; ++j) {
                EXPECT_NEAR(y(j, j).real(), c, 1e-15);
                for (int k = 0; k < m; ++k) {
                    if (j != k) {
                        EXPECT_NEAR(std::abs(y(j, k).real()), std::abs(s), 1e-15);
                        EXPECT_NEAR(std::abs(y(j, k) + y(k, j)), 0.0, 1e-15);
                    }
                }
            }
            EXPECT_LT(max_abs_diff(y, symmetric_unitary_product(m, phi)), 1e-12) << m << " " << phi;
            EXPECT_LT(max_abs_diff(ComplexMatrix(y.transpose()), symmetric_unitary(m, -phi)), 1e-15);
            EXPECT_LT(unitarity_error(y), 1e-12);
        }
    }
    EXPECT_LT(max_abs_diff(symmetric_unitary(2, 0.3), mzi_unitary(0.3)), 1e-15);
}

TEST(netbuild, symmetric_unitary_four_modes) {
    const double phi = 0.9;
    const double c = std::cos(phi / 2);
    const double s = std::sin(phi / 2) / std::sqrt(3.0);
    ComplexMatrix expected(4, 4);
    expected << c, -s, s, s,  //
        s, c, s, -s,          //
        -s, -s, c, -s,        //
        -s, s, s, c;
    EXPECT_LT(max_abs_diff(symmetric_unitary(4, phi), expected), 1e-15);
}

TEST(netbuild, symmetric_block_identity) {
    const int m = 8;
    const double phi = 1.1;
    const ComplexMatrix a = symmetrizer_block_a(m).cast<Complex>();
    const ComplexMatrix b = symmetrizer_block_b(m).cast<Complex>();
    const ComplexMatrix y2 = mzi_unitary(phi);
    const ComplexMatrix d2 = a * y2 * a.transpose() + (m / 2 - 1.0) * b * y2 * b.transpose();
    EXPECT_LT(max_abs_diff(d2, ComplexMatrix(symmetric_unitary(m, phi).topLeftCorner(2, 2))), 1e-12);
}

TEST(netbuild, separable_unitary) {
    EXPECT_LT(max_abs_diff(separable_unitary(2, 0.5), mzi_unitary(0.5)), 1e-15);
    EXPECT_LT(max_abs_diff(separable_unitary(4, 0), ComplexMatrix::Identity(4, 4)), 1e-15);
    const ComplexMatrix y = separable_unitary(6, 0.9);
    EXPECT_LT(unitarity_error(y), 1e-14);
    for (int j = 0; j < 6; ++j) {
        for (int k = 0; k < 6; ++k) {
            if (j / 2 != k / 2) {
                EXPECT_EQ(y(j, k), Complex(0.0));
            }
        }
    }
}

TEST(netbuild, all_unitaries_unitary) {
    for (int m = 2; m <= 64; m += 2) {
        for (double phi : kPhis) {
            EXPECT_LT(unitarity_error(separable_unitary(m, phi)), 1e-10);
            EXPECT_LT(unitarity_error(uniform_unitary(m, phi)), 1e-10);
            EXPECT_LT(unitarity_error(qft(m)), 1e-10);
            if (symmetric_size_supported(m)) {
                EXPECT_LT(unitarity_error(symmetric_unitary(m, phi)), 1e-10);
            }
        }
    }
}

TEST(netbuild, generator_values) {
    const ComplexMatrix h = generator(NetworkKind::mzi, 2);
    EXPECT_EQ(h(0, 1), Complex(0, -0.5));
    EXPECT_EQ(h(1, 0), Complex(0, 0.5));
    EXPECT_EQ(h(0, 0), Complex(0.0));
    const ComplexMatrix hs = generator(NetworkKind::symmetric, 4);
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(std::abs(hs(j, k)), j == k ? 0.0 : 1 / (2 * std::sqrt(3.0)), 1e-15);
        }
    }
    EXPECT_THROW(generator(NetworkKind::symmetric, 6), Error);
    EXPECT_THROW(generator(NetworkKind::mzi, 4), Error);
}

TEST(netbuild, generator_exponential) {
    // exp(-i phi h) is the adjoint of the scattering matrix.
    for (NetworkKind kind : {NetworkKind::separable, NetworkKind::uniform, NetworkKind::symmetric}) {
        for (int m : {2, 4, 8, 16}) {
            const ComplexMatrix h = generator(kind, m);
            EXPECT_LT(hermiticity_error(h), 1e-15);
            for (double phi : {0.1, 0.5, 0.7, 2.0}) {
                const ComplexMatrix y = network_unitary({kind, m, phi});
                EXPECT_LT(max_abs_diff(expm_hermitian(h, phi), ComplexMatrix(y.adjoint())), 1e-10)
                    << to_string(kind) << " m=" << m << " phi=" << phi;
                EXPECT_LT(max_abs_diff(expm_hermitian(h, -phi), y), 1e-10);
            }
        }
    }
    const ComplexMatrix h = generator(NetworkKind::mzi, 2);
    EXPECT_LT(max_abs_diff(expm_hermitian(h, -0.3), mzi_unitary(0.3)), 1e-12);
}

TEST(netbuild, sylvester_is_relabelled_separable) {
    for (int m : {2, 4, 8, 16}) {
        for (double phi : {0.2, 1.7}) {
            const ComplexMatrix q = sylvester_mode_map(m);
            EXPECT_LT(unitarity_error(q), 1e-15);
            EXPECT_LT(max_abs_diff(ComplexMatrix(q.adjoint() * sylvester_unitary(m, phi) * q), separable_unitary(m, phi)),
                      1e-12);
        }
    }
}

TEST(netbuild, similarity_permutations) {
    EXPECT_LT(permutation_similarity_check(SimilarityVariant::M4, 0.8), 1e-12);
    EXPECT_EQ(permutation_similarity_check(SimilarityVariant::M41, 0.0), 0.0);
    EXPECT_LT(permutation_similarity_check(SimilarityVariant::M42, 1.3), 1e-12);
    for (double phi : kPhis) {
        for (auto v : {SimilarityVariant::M4, SimilarityVariant::M41, SimilarityVariant::M42}) {
            EXPECT_LT(permutation_similarity_check(v, phi), 1e-12);
        }
    }
}

TEST(netbuild, parse_kind) {
    EXPECT_EQ(parse_network_kind("sep"), NetworkKind::separable);
    EXPECT_EQ(parse_network_kind("uni"), NetworkKind::uniform);
    EXPECT_EQ(parse_network_kind("sym"), NetworkKind::symmetric);
    EXPECT_EQ(parse_network_kind("mzi"), NetworkKind::mzi);
    EXPECT_THROW(parse_network_kind("foo"), Error);
    EXPECT_THROW((NetworkSpec{NetworkKind::symmetric, 12, 0.0}.validate()), Error);
    EXPECT_NO_THROW((NetworkSpec{NetworkKind::uniform, 12, 0.0}.validate()));
}
