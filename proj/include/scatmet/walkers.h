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

// Monte Carlo walkers: each walker draws k scattershot samples and keeps the
// running difference of closed-form QFI between two networks.

#ifndef SCATMET_WALKERS_H
#define SCATMET_WALKERS_H

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "scatmet/occupation.h"
#include "scatmet/scattershot.h"

namespace scatmet {

enum class Comparison { sep_vs_sym, uni_vs_sym };

Comparison parse_comparison(std::string_view text);
std::string_view to_string(Comparison pair);

/// F(first) - F(sym) for one sample. Only the excess terms are evaluated; the
/// shot-noise term n is common to both and cancels.
double delta_f(const OccupationVector &sample, Comparison pair);

constexpr double kMaxTotalSamples = 1e9;
constexpr double kMaxTraceEntries = 2e7;

struct WalkerConfig {
    int modes = 4096;
    double chi = 0.0;
    /// Mean photon number used for the analytic reference curve.
    double n_avg = 0.0;
    Comparison pair = Comparison::sep_vs_sym;
    int walkers = 2000;
    int kmax = 100;
    std::uint64_t seed = 1;
    bool postselect_single = true;
    bool traces = false;
    /// 0 picks the hardware concurrency, capped by SCATTERSHOT_THREADS.
    int threads = 0;

    /// chi from chi_for_mean_photons(m, n_avg).
    static WalkerConfig from_mean_photons(int m, double n_avg);
    /// n_avg taken as the source mean (after postselection when enabled).
    static WalkerConfig from_chi(int m, double chi, bool postselect_single);

    SqueezerSource source() const {
        return {modes, chi, postselect_single};
    }
    /// Throws DomainError / UnsupportedSize / TooLarge.
    void validate() const;
};

struct WalkerRecord {
    int walker_id = 0;
    std::vector<double> delta_f;
    std::vector<double> delta_f_tot;
};

constexpr std::array<double, 5> kQuantileLevels = {0.05, 0.25, 0.50, 0.75, 0.95};

struct EnsembleSummary {
    int kmax = 0;
    int walkers = 0;
    /// Index k - 1 holds P(ΔF_tot(k) > 0).
    std::vector<double> p_advantage;
    /// quantiles[k - 1][level] of ΔF_tot(k), linear interpolation between
    /// order statistics.
    std::vector<std::array<double, 5>> quantiles;
    /// First upward crossing of 0.5 by P(k), with P(0) = 0; NaN if none.
    double empirical_kadv = 0.0;
    double mean_increment = 0.0;
    double stderr_increment = 0.0;
    SampleStats photons;
    PostselectStats postselection;
    std::vector<WalkerRecord> records;
};

/// Walkers advance in lockstep blocks of k so every per-k column of totals is
/// available at once; quantiles are exact and memory stays O(walkers * block).
/// The result depends only on the config, never on the thread count.
EnsembleSummary run_ensemble(const WalkerConfig &config);

/// Threads used for `requested` (0 = auto) after the SCATTERSHOT_THREADS cap.
int resolve_threads(int requested);

/// 1 - P0^k with P0 = 2^n C(m/2, n) / C(m, n).
double advantage_probability_analytic(double m, double n_avg, double k);

/// floor(k n (n-1) / (2 (m-1))) + 1
int region_label(double m, double n_avg, long long k);

/// Linear-interpolated first upward crossing of 0.5, starting from P(0) = 0.
double empirical_crossing(const std::vector<double> &p_advantage);

/// sum_k |P(k+1) - P(k)|, with P(0) = 0.
double total_variation(const std::vector<double> &p);

/// Central `level` band [lo, hi] of the fraction of successes in `trials`
/// Bernoulli(p) draws, from exact binomial quantiles.
std::pair<double, double> binomial_band(int trials, double p, double level = 0.99);

}  // namespace scatmet

#endif
