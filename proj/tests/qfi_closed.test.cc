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

#include "scatmet/qfi_closed.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "scatmet/combinatorics.h"
#include "scatmet/error.h"

using namespace scatmet;

namespace {

OccupationVector occ(const char *text) {
    return OccupationVector::parse(text);
}

const char *kTwoPhotonInputs[] = {"1100", "1010", "1001", "0110", "0101", "0011"};

}  // namespace

TEST(qfi_closed, four_mode_table) {
    const double sep[] = {4, 2, 2, 2, 2, 4};
    const double uni[] = {3, 2, 3, 3, 2, 3};
    for (int i = 0; i < 6; ++i) {
        auto v = occ(kTwoPhotonInputs[i]);
        EXPECT_NEAR(qfi_separable(v), sep[i], 1e-12) << kTwoPhotonInputs[i];
        EXPECT_NEAR(qfi_uniform(v), uni[i], 1e-12) << kTwoPhotonInputs[i];
        EXPECT_NEAR(qfi_symmetric(v), 8.0 / 3, 1e-12) << kTwoPhotonInputs[i];
        for (NetworkKind kind : {NetworkKind::separable, NetworkKind::uniform, NetworkKind::symmetric}) {
            EXPECT_NEAR(average_qfi_exact(kind, v), 8.0 / 3, 1e-12);
        }
    }
}

TEST(qfi_closed, spot_values) {
    EXPECT_EQ(qfi_separable(OccupationVector::from_dense(std::vector<int>{3, 2})), 17);
    EXPECT_NEAR(qfi_uniform(occ("10100000")), 2.0, 1e-15);
    EXPECT_NEAR(qfi_symmetric(occ("21000000")), 25.0 / 7, 1e-15);
    EXPECT_EQ(qfi_symmetric(occ("00500000")), 5);
    EXPECT_EQ(qfi_separable(occ("00")), 0);
    EXPECT_THROW(qfi_separable(occ("100")), Error);
    EXPECT_THROW(qfi_uniform(occ("100")), Error);
}

TEST(qfi_closed, shot_noise_floor) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 2 * (1 + static_cast<int>(rng() % 8));
        std::vector<int> counts(m);
        for (auto &c : counts) {
            c = static_cast<int>(rng() % 3);
        }
        auto v = OccupationVector::from_dense(counts);
        const double n = v.total();
        EXPECT_GE(qfi_separable(v), n);
        EXPECT_GE(qfi_uniform(v), n - 1e-12);
        EXPECT_GE(qfi_symmetric(v), n);
        EXPECT_EQ(qfi_symmetric(v) == n, static_cast<int>(v.occupied().size()) <= 1);
        bool pair = false;
        for (int p = 0; p < m / 2; ++p) {
            pair = pair || (counts[2 * p] > 0 && counts[2 * p + 1] > 0);
        }
        EXPECT_EQ(qfi_separable(v) == n, !pair);
        bool odd = false;
        bool even = false;
        for (int j = 0; j < m; ++j) {
            odd = odd || (counts[j] > 0 && j % 2 == 0);
            even = even || (counts[j] > 0 && j % 2 == 1);
        }
        EXPECT_EQ(std::abs(qfi_uniform(v) - n) < 1e-12, !(odd && even));
    }
}

TEST(qfi_closed, permutation_average_equality) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 * (1 + static_cast<int>(rng() % 4));
        std::vector<int> counts(m, 0);
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            counts[rng() % m] += 1;
        }
        auto v = OccupationVector::from_dense(counts);
        const double sym = qfi_symmetric(v);
        EXPECT_NEAR(average_qfi_exact(NetworkKind::separable, v), sym, 1e-12) << v.to_string();
        EXPECT_NEAR(average_qfi_exact(NetworkKind::uniform, v), sym, 1e-12) << v.to_string();
        EXPECT_NEAR(average_qfi_exact(NetworkKind::symmetric, v), sym, 1e-12) << v.to_string();
    }
    EXPECT_NEAR(average_qfi_exact(NetworkKind::separable, occ("211000")), qfi_symmetric(occ("211000")), 1e-12);
    // 16 distinct counts: 16! arrangements.
    std::vector<int> big(16);
    for (int j = 0; j < 16; ++j) {
        big[j] = j;
    }
    EXPECT_THROW(average_qfi_exact(NetworkKind::separable, OccupationVector::from_dense(big)), Error);
}

TEST(qfi_closed, pair_probability) {
    EXPECT_NEAR(pair_probability(4, 2, 1), 1.0 / 3, 1e-15);
    EXPECT_NEAR(pair_probability(4, 2, 0), 2.0 / 3, 1e-15);
    double total = 0;
    for (int x = 0; x <= 2; ++x) {
        total += pair_probability(12, 5, x);
    }
    EXPECT_NEAR(total, 1.0, 1e-15);
    EXPECT_THROW(pair_probability(4, 5, 0), Error);
    EXPECT_THROW(pair_probability(4, 2, 2), Error);
    EXPECT_THROW(pair_probability(5, 2, 0), Error);
}

TEST(qfi_closed, pair_probability_matches_enumeration) {
    // Oracle: enumerate every n-subset of m modes and count separable pairs.
    for (int m : {4, 6, 8, 10}) {
        for (int n = 0; n <= m; ++n) {
            std::vector<double> freq(n / 2 + 1, 0.0);
            int subsets = 0;
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                if (__builtin_popcount(mask) != n) {
                    continue;
                }
                int pairs = 0;
                for (int p = 0; p < m / 2; ++p) {
                    pairs += ((mask >> (2 * p)) & 3u) == 3u;
                }
                freq[pairs] += 1;
                ++subsets;
            }
            for (int x = 0; 2 * x <= n; ++x) {
                EXPECT_NEAR(pair_probability(m, n, x), freq[x] / subsets, 1e-14) << m << " " << n << " " << x;
            }
        }
    }
}

TEST(qfi_closed, combinatorial_identity_exact) {
    for (int m = 2; m <= 40; m += 2) {
        for (int n = 0; n <= 10 && n <= m; ++n) {
            std::uint64_t acc = 0;
            for (int x = 0; 2 * x <= n; ++x) {
                acc += *binomial_exact(m / 2, x) * *binomial_exact(m / 2 - x, n - 2 * x) << (n - 2 * x);
            }
            EXPECT_EQ(acc, *binomial_exact(m, n)) << m << " " << n;
        }
    }
}

TEST(qfi_closed, separable_single_photon_average) {
    EXPECT_NEAR(avg_qfi_separable_single_photons(4, 2), 8.0 / 3, 1e-15);
    EXPECT_NEAR(avg_qfi_separable_single_photons(12, 1), 1.0, 1e-15);
    EXPECT_NEAR(avg_qfi_separable_single_photons(16, 4), 4.8, 1e-14);
    for (int m = 2; m <= 40; m += 2) {
        for (int n = 0; n <= 10 && n <= m; ++n) {
            EXPECT_NEAR(avg_qfi_separable_single_photons(m, n), n + n * (n - 1.0) / (m - 1), 1e-12);
        }
    }
    EXPECT_THROW(avg_qfi_separable_single_photons(4, 5), Error);
}

TEST(qfi_closed, cosecant_sum) {
    EXPECT_NEAR(cosecant_sum(4, 1), 4.0, 1e-13);
    EXPECT_NEAR(cosecant_sum(2, 1), 1.0, 1e-15);
    EXPECT_NEAR(cosecant_sum(256, 7), 16384.0, 1e-6);
    for (int m = 4; m <= 256; m += 2) {
        for (int j = 1; j <= m / 2; ++j) {
            EXPECT_LT(std::abs(cosecant_sum(m, j) - m * m / 4.0), 1e-9 * m * m);
        }
    }
    EXPECT_THROW(cosecant_sum(4, 3), Error);
}

TEST(qfi_closed, uniform_coefficient_range) {
    // 8 / (m^2 sin^2(pi d / m)) for odd d; the upper end approaches 8/pi^2
    // from above as m grows.
    for (int m = 8; m <= 1024; m *= 2) {
        double lo = 1e300;
        double hi = 0;
        for (int d = 1; d < m; d += 2) {
            const double sn = std::sin(std::numbers::pi * d / m);
            const double coeff = 8.0 / (m * m * sn * sn);
            lo = std::min(lo, coeff);
            hi = std::max(hi, coeff);
        }
        EXPECT_GE(lo, 8.0 / (m * m) - 1e-18);
        const double eps = std::numbers::pi * std::numbers::pi / (2.0 * m * m);
        EXPECT_LE(hi, 8.0 / (std::numbers::pi * std::numbers::pi) * (1 + eps));
        EXPECT_GT(hi, 8.0 / (std::numbers::pi * std::numbers::pi));
    }
}

TEST(qfi_closed, kadv) {
    EXPECT_NEAR(kadv(4, 2), std::log(0.5) / std::log(2.0 / 3), 1e-12);
    EXPECT_GT(kadv(131072, 40), kadv(65536, 40));
    EXPECT_GT(kadv(65536, 30), kadv(65536, 40));
    EXPECT_TRUE(std::isfinite(kadv(65536, 40)));
    EXPECT_GT(kadv(65536, 40), 0);
    EXPECT_TRUE(std::isinf(kadv(64, 1)));
    // Real-valued n_avg falls back to the log-gamma form; it must agree with
    // the integer product form at integer points.
    EXPECT_NEAR(kadv(4096, 12.0 + 1e-9), kadv(4096, 12), 1e-5);
    EXPECT_THROW(kadv(4, 3), Error);
    EXPECT_THROW(kadv(4, 0.5), Error);
}

TEST(qfi_closed, region_bound) {
    EXPECT_EQ(std::floor(region_bound(65536, 40)), 84);
    EXPECT_EQ(std::ceil(region_bound(262144, 30)), 603);
    EXPECT_EQ(region_bound(4, 2), 3);
    EXPECT_THROW(region_bound(4, 1.5), Error);
}

TEST(combinatorics, binomials) {
    EXPECT_EQ(*binomial_exact(10, 3), 120u);
    EXPECT_EQ(*binomial_exact(3, 5), 0u);
    EXPECT_EQ(*binomial_exact(62, 31), 465428353255261088ULL);
    EXPECT_FALSE(binomial_exact(200, 100).has_value());
    EXPECT_EQ(binomial(40, 20), 137846528820.0);
    EXPECT_NEAR(binomial(200, 100) / 9.054851465610328e58, 1.0, 1e-10);
    EXPECT_NEAR(log_binomial(10, 3), std::log(120.0), 1e-12);
    EXPECT_NEAR(log_no_pair_probability(4, 2), std::log(2.0 / 3), 1e-15);
    EXPECT_NEAR(log_no_pair_probability(262144, 30),
                30 * std::log(2.0) + log_binomial(131072, 30) - log_binomial(262144, 30), 1e-8);
}
