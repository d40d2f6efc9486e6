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

// Scattershot source: m heralded two-mode squeezers with a common squeezing
// parameter chi. Each mode independently carries n photons with probability
// (1 - chi^2) chi^(2n).

#ifndef SCATMET_SCATTERSHOT_H
#define SCATMET_SCATTERSHOT_H

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "scatmet/occupation.h"

namespace scatmet {

/// chi = sqrt(n_avg / (m + n_avg)), so that m chi^2 / (1 - chi^2) = n_avg.
double chi_for_mean_photons(double m, double n_avg);

struct SqueezerSource {
    int modes = 0;
    double chi = 0.0;
    bool postselect_single = false;

    void validate() const;
    double mean_photons() const;
};

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of stream `index` under `master`; distinct streams for distinct
/// indices, stable across platforms.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Generator for one walker or one sample stream.
using Rng = std::mt19937_64;
Rng make_rng(std::uint64_t master, std::uint64_t index = 0);

/// Sparse draw: K ~ Binomial(m, chi^2) occupied modes chosen uniformly without
/// replacement, each holding 1 + G photons with G geometric on {0, 1, ...}
/// with success probability 1 - chi^2. Same law as independent per-mode draws.
OccupationVector sample(const SqueezerSource &source, Rng &rng);

/// Independent per-mode geometric draws. Reference for the sparse sampler.
OccupationVector sample_dense_reference(const SqueezerSource &source, Rng &rng);

struct PostselectStats {
    std::uint64_t attempts = 0;
    std::uint64_t accepted = 0;

    double acceptance() const {
        return attempts == 0 ? 1.0 : static_cast<double>(accepted) / attempts;
    }
    /// Below 1% after at least 100 attempts.
    bool low_acceptance() const {
        return attempts >= 100 && acceptance() < 0.01;
    }
};

constexpr std::uint64_t kDefaultMaxAttempts = 1000000;

/// Redraws until every mode holds at most one photon. Throws
/// AcceptanceTooLow when one sample needs more than `max_attempts` draws.
OccupationVector sample_postselected_single(const SqueezerSource &source, Rng &rng, PostselectStats *stats = nullptr,
                                            std::uint64_t max_attempts = kDefaultMaxAttempts);

/// Draws according to source.postselect_single.
OccupationVector draw(const SqueezerSource &source, Rng &rng, PostselectStats *stats = nullptr);

/// Probability (1 - chi^4)^m that a raw sample passes postselection.
double postselection_acceptance(int m, double chi);

/// Below this expected acceptance a postselected run is refused up front.
constexpr double kMinExpectedAcceptance = 1e-4;
/// AcceptanceTooLow when postselection is on and the expected acceptance is
/// under kMinExpectedAcceptance.
void require_feasible_postselection(const SqueezerSource &source);

/// Negative binomial C(n + m - 1, n) chi^(2n) (1 - chi^2)^m.
double total_photon_pmf(int m, double chi, int n);

/// Binomial(m, chi^2 / (1 + chi^2)) law of the photon number after
/// single-photon postselection.
double postselected_photon_pmf(int m, double chi, int n);

struct SampleStats {
    std::map<int, std::uint64_t> histogram;
    std::uint64_t samples = 0;
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(const OccupationVector &v);
    void merge(const SampleStats &other);
    double mean_n() const;
    double var_n() const;
};

/// {"modes": m, "occ": [[index, count], ...]} with 1-based indices.
std::string sample_to_json(const OccupationVector &v);
OccupationVector sample_from_json(const std::string &line);

}  // namespace scatmet

#endif
