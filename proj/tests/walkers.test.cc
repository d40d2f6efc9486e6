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

#include "scatmet/walkers.h"

#include <cmath>
#include <cstdlib>

#include "gtest/gtest.h"
#include "scatmet/error.h"
#include "scatmet/qfi_closed.h"

using namespace scatmet;

TEST(walkers, delta_f_examples) {
    EXPECT_NEAR(delta_f(OccupationVector::parse("1100"), Comparison::sep_vs_sym), 4.0 / 3, 1e-15);
    EXPECT_NEAR(delta_f(OccupationVector::parse("1010"), Comparison::sep_vs_sym), -2.0 / 3, 1e-15);
    EXPECT_NEAR(delta_f(OccupationVector::parse("1001"), Comparison::uni_vs_sym), 1.0 / 3, 1e-15);
    EXPECT_THROW(delta_f(OccupationVector::parse("101000"), Comparison::sep_vs_sym), Error);
}

TEST(walkers, delta_f_is_difference_of_closed_forms) {
    Rng rng = make_rng(3);
    const SqueezerSource src{32, 0.4};
    for (int i = 0; i < 200; ++i) {
        const OccupationVector v = sample(src, rng);
        EXPECT_NEAR(delta_f(v, Comparison::sep_vs_sym), qfi_separable(v) - qfi_symmetric(v), 1e-12);
        EXPECT_NEAR(delta_f(v, Comparison::uni_vs_sym), qfi_uniform(v) - qfi_symmetric(v), 1e-12);
    }
}

TEST(walkers, vacuum_ensemble) {
    WalkerConfig c = WalkerConfig::from_chi(64, 0.0, false);
    c.walkers = 50;
    c.kmax = 20;
    const EnsembleSummary s = run_ensemble(c);
    for (int k = 0; k < c.kmax; ++k) {
        EXPECT_EQ(s.p_advantage[k], 0.0);
        for (double q : s.quantiles[k]) {
            EXPECT_EQ(q, 0.0);
        }
    }
    EXPECT_TRUE(std::isnan(s.empirical_kadv));
    EXPECT_EQ(s.mean_increment, 0.0);
}

TEST(walkers, schedule_independent) {
    WalkerConfig c = WalkerConfig::from_mean_photons(256, 6);
    c.walkers = 300;
    c.kmax = 40;
    c.seed = 99;
    c.traces = true;
    c.threads = 1;
    const EnsembleSummary a = run_ensemble(c);
    c.threads = 3;
    const EnsembleSummary b = run_ensemble(c);
    EXPECT_EQ(a.p_advantage, b.p_advantage);
    EXPECT_EQ(a.quantiles, b.quantiles);
    EXPECT_EQ(a.mean_increment, b.mean_increment);
    EXPECT_EQ(a.photons.histogram, b.photons.histogram);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t w = 0; w < a.records.size(); ++w) {
        EXPECT_EQ(a.records[w].delta_f_tot, b.records[w].delta_f_tot);
    }
}

TEST(walkers, totals_are_exact_prefix_sums) {
    WalkerConfig c = WalkerConfig::from_mean_photons(128, 5);
    c.walkers = 40;
    c.kmax = 60;
    c.traces = true;
    const EnsembleSummary s = run_ensemble(c);
    for (const auto &r : s.records) {
        double acc = 0.0;
        for (int k = 0; k < c.kmax; ++k) {
            acc += r.delta_f[k];
            EXPECT_EQ(acc, r.delta_f_tot[k]);
        }
    }
    for (int k = 0; k < c.kmax; ++k) {
        int positive = 0;
        for (const auto &r : s.records) {
            positive += r.delta_f_tot[k] > 0;
        }
        EXPECT_EQ(s.p_advantage[k], positive / 40.0);
        const auto &q = s.quantiles[k];
        for (std::size_t l = 1; l < q.size(); ++l) {
            EXPECT_LE(q[l - 1], q[l]);
        }
    }
}

TEST(walkers, zero_mean_drift) {
    for (Comparison pair : {Comparison::sep_vs_sym, Comparison::uni_vs_sym}) {
        WalkerConfig c = WalkerConfig::from_chi(32, 0.3, false);
        c.pair = pair;
        c.walkers = 10000;
        c.kmax = 1000;
        const EnsembleSummary s = run_ensemble(c);
        EXPECT_LT(std::abs(s.mean_increment), 5 * s.stderr_increment) << to_string(pair);
        EXPECT_GT(s.stderr_increment, 0);
    }
}

TEST(walkers, analytic_probability) {
    EXPECT_EQ(advantage_probability_analytic(64, 4, 0), 0.0);
    EXPECT_NEAR(advantage_probability_analytic(4, 2, 1), 1.0 / 3, 1e-15);
    for (auto [m, n] : {std::pair{4096.0, 12.0}, {65536.0, 40.0}, {262144.0, 30.0}}) {
        EXPECT_NEAR(advantage_probability_analytic(m, n, kadv(m, n)), 0.5, 1e-12);
    }
    EXPECT_THROW(advantage_probability_analytic(4, 3, 1), Error);
}

TEST(walkers, region_labels) {
    EXPECT_EQ(region_label(65536, 40, 84), 1);
    EXPECT_EQ(region_label(65536, 40, 85), 2);
    EXPECT_EQ(region_label(262144, 30, 602), 1);
    EXPECT_EQ(region_label(4, 2, 1), 1);
    EXPECT_THROW(region_label(4, 1, 1), Error);
}

TEST(walkers, crossing_and_variation) {
    EXPECT_NEAR(empirical_crossing({0.1, 0.3, 0.7, 0.9}), 2.5, 1e-15);
    EXPECT_NEAR(empirical_crossing({0.6}), 0.5 / 0.6, 1e-15);
    EXPECT_TRUE(std::isnan(empirical_crossing({0.1, 0.2})));
    EXPECT_NEAR(total_variation({0.5, 0.2, 0.6}), 0.5 + 0.3 + 0.4, 1e-15);
}

TEST(walkers, binomial_band) {
    const auto [lo, hi] = binomial_band(2000, 0.5, 0.99);
    // Normal approximation: 0.5 +- 2.576 * sqrt(0.25 / 2000) = 0.5 +- 0.0288.
    EXPECT_NEAR(lo, 0.4712, 2e-3);
    EXPECT_NEAR(hi, 0.5288, 2e-3);
    EXPECT_EQ(binomial_band(10, 0.0).second, 0.0);
}

TEST(walkers, resource_guards) {
    WalkerConfig c = WalkerConfig::from_mean_photons(4096, 12);
    c.walkers = 100000;
    c.kmax = 100000;
    try {
        run_ensemble(c);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
    c.walkers = 10000;
    c.kmax = 10000;
    c.traces = true;
    EXPECT_THROW(c.validate(), Error);
    c.modes = 24;
    c.traces = false;
    EXPECT_THROW(c.validate(), Error);
}

TEST(walkers, thread_cap) {
    setenv("SCATTERSHOT_THREADS", "2", 1);
    EXPECT_EQ(resolve_threads(8), 2);
    unsetenv("SCATTERSHOT_THREADS");
    EXPECT_EQ(resolve_threads(3), 3);
}
