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

#include "scatmet/decomp.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "scatmet/error.h"
#include "scatmet/netbuild.h"

using namespace scatmet;

namespace {

RealMatrix random_orthogonal(int m, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    RealMatrix a(m, m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            a(r, c) = g(rng);
        }
    }
    Eigen::HouseholderQR<RealMatrix> qr(a);
    return qr.householderQ();
}

}  // namespace

TEST(decomp, identity) {
    const ElementList e = decompose_orthogonal(RealMatrix::Identity(4, 4));
    EXPECT_EQ(rotation_count(e), 0);
    EXPECT_TRUE(reflectivity_report(e).empty());
    EXPECT_LT(max_abs_diff(reconstruct(e, 4), RealMatrix::Identity(4, 4)), 1e-15);
}

TEST(decomp, single_elements) {
    EXPECT_LT(max_abs_diff(reconstruct({Rotation{0, 1.0}}, 2), RealMatrix::Identity(2, 2)), 1e-15);
    RealMatrix flip = RealMatrix::Identity(2, 2);
    flip(1, 1) = -1;
    EXPECT_EQ(reconstruct({SignFlip{1}}, 2), flip);
    const double eta = 0.3;
    RealMatrix v(2, 2);
    v << eta, -std::sqrt(1 - eta * eta), std::sqrt(1 - eta * eta), eta;
    EXPECT_LT(max_abs_diff(reconstruct({Rotation{0, eta}}, 2), v), 1e-15);
    EXPECT_THROW(reconstruct({Rotation{1, 0.5}}, 2), Error);
    EXPECT_THROW(reconstruct({SignFlip{2}}, 2), Error);
}

TEST(decomp, symmetrizer_four_modes) {
    const RealMatrix t4 = symmetrizer(4);
    const ElementList e = decompose_orthogonal(t4);
    EXPECT_LT(max_abs_diff(reconstruct(e, 4), t4), 1e-12);
    EXPECT_LE(rotation_count(e), 6);
    for (double eta : reflectivity_report(e)) {
        EXPECT_GE(eta, 0.0);
        EXPECT_LE(eta, 1.0);
    }
}

TEST(decomp, random_round_trip) {
    std::mt19937_64 rng(8);
    for (int m : {2, 3, 5, 8, 16}) {
        for (int trial = 0; trial < 5; ++trial) {
            const RealMatrix t = random_orthogonal(m, rng);
            const ElementList e = decompose_orthogonal(t);
            EXPECT_LT(max_abs_diff(reconstruct(e, m), t), 1e-12) << m;
            EXPECT_LE(rotation_count(e), m * (m - 1) / 2);
            // Sign flips account for the determinant.
            int flips = 0;
            for (const auto &el : e) {
                flips += std::holds_alternative<SignFlip>(el);
            }
            EXPECT_EQ(flips % 2 == 1, t.determinant() < 0) << m;
        }
    }
    for (int m = 4; m <= 16; m *= 2) {
        const RealMatrix t = symmetrizer(m);
        EXPECT_LT(max_abs_diff(reconstruct(decompose_orthogonal(t), m), t), 1e-12);
    }
}

TEST(decomp, rejects_non_orthogonal) {
    RealMatrix a = RealMatrix::Identity(3, 3);
    a(0, 1) = 0.1;
    try {
        decompose_orthogonal(a);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotOrthogonal);
    }
}

TEST(decomp, json_round_trip) {
    const ElementList e = decompose_orthogonal(symmetrizer(4));
    const ElementList back = elements_from_json(elements_to_json(e));
    EXPECT_LT(max_abs_diff(reconstruct(back, 4), symmetrizer(4)), 1e-12);
    EXPECT_NE(circuit_listing(e).find("V2("), std::string::npos);
    EXPECT_THROW(elements_from_json(R"([{"type":"mirror"}])"), Error);
}

TEST(decomp, eta_closed_form) {
    EXPECT_NEAR(1 / std::sqrt(300 + 120 * std::sqrt(6.0)), 0.041033, 1e-6);
}
