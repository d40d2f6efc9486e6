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

#include "scatmet/scattershot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "json.hpp"
#include "scatmet/combinatorics.h"
#include "scatmet/error.h"

namespace scatmet {

double chi_for_mean_photons(double m, double n_avg) {
    if (!(m > 0) || !(n_avg >= 0)) {
        fail(ErrorKind::DomainError, "chi_for_mean_photons needs m > 0 and n_avg >= 0");
    }
    return std::sqrt(n_avg / (m + n_avg));
}

void SqueezerSource::validate() const {
    if (modes < 1) {
        fail(ErrorKind::DomainError, "source needs at least one mode");
    }
    if (!(chi >= 0.0 && chi < 1.0)) {
        fail(ErrorKind::DomainError, "squeezing must satisfy 0 <= chi < 1");
    }
}

double SqueezerSource::mean_photons() const {
    const double x = chi * chi;
    if (postselect_single) {
        return modes * x / (1 + x);
    }
    return modes * x / (1 - x);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

Rng make_rng(std::uint64_t master, std::uint64_t index) {
    return Rng(derive_seed(master, index));
}

OccupationVector sample(const SqueezerSource &source, Rng &rng) {
    source.validate();
    const double x = source.chi * source.chi;
    if (x == 0.0) {
        return OccupationVector(source.modes);
    }
    const int occupied = std::binomial_distribution<int>(source.modes, x)(rng);
    // Floyd's algorithm: `occupied` distinct indices out of m.
    std::unordered_set<int> chosen;
    chosen.reserve(occupied * 2);
    for (int j = source.modes - occupied; j < source.modes; ++j) {
        const int t = std::uniform_int_distribution<int>(0, j)(rng);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    std::vector<int> modes(chosen.begin(), chosen.end());
    std::sort(modes.begin(), modes.end());
    std::geometric_distribution<int> extra(1.0 - x);
    std::vector<ModeCount> pairs;
    pairs.reserve(modes.size());
    for (int mode : modes) {
        pairs.push_back({mode, 1 + extra(rng)});
    }
    return OccupationVector::from_pairs(source.modes, std::move(pairs));
}

OccupationVector sample_dense_reference(const SqueezerSource &source, Rng &rng) {
    source.validate();
    const double x = source.chi * source.chi;
    std::vector<int> counts(source.modes, 0);
    if (x > 0.0) {
        std::geometric_distribution<int> per_mode(1.0 - x);
        for (auto &c : counts) {
            c = per_mode(rng);
        }
    }
    return OccupationVector::from_dense(counts);
}

OccupationVector sample_postselected_single(const SqueezerSource &source, Rng &rng, PostselectStats *stats,
                                            std::uint64_t max_attempts) {
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        OccupationVector v = sample(source, rng);
        if (stats != nullptr) {
            stats->attempts += 1;
        }
        if (v.single_photon()) {
            if (stats != nullptr) {
                stats->accepted += 1;
            }
            return v;
        }
    }
    fail(ErrorKind::AcceptanceTooLow, "no single-photon sample in " + std::to_string(max_attempts) +
                                          " attempts; expected acceptance " +
                                          std::to_string(postselection_acceptance(source.modes, source.chi)) +
                                          ", lower chi or m");
}

OccupationVector draw(const SqueezerSource &source, Rng &rng, PostselectStats *stats) {
    return source.postselect_single ? sample_postselected_single(source, rng, stats) : sample(source, rng);
}

double postselection_acceptance(int m, double chi) {
    const double x = chi * chi;
    return std::exp(m * std::log1p(-x * x));
}

void require_feasible_postselection(const SqueezerSource &source) {
    if (!source.postselect_single) {
        return;
    }
    const double acc = postselection_acceptance(source.modes, source.chi);
    if (acc < kMinExpectedAcceptance) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", acc);
        fail(ErrorKind::AcceptanceTooLow, std::string("expected postselection acceptance ") + buf +
                                              " is below 1e-4; lower chi or m, or pass --no-postselect-single");
    }
}

double total_photon_pmf(int m, double chi, int n) {
    if (n < 0) {
        return 0.0;
    }
    const double x = chi * chi;
    if (x == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    return std::exp(log_binomial(n + m - 1.0, n) + n * std::log(x) + m * std::log1p(-x));
}

double postselected_photon_pmf(int m, double chi, int n) {
    if (n < 0 || n > m) {
        return 0.0;
    }
    const double x = chi * chi;
    if (x == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    const double p = x / (1 + x);
    return std::exp(log_binomial(m, n) + n * std::log(p) + (m - n) * std::log1p(-p));
}

void SampleStats::add(const OccupationVector &v) {
    histogram[v.total()] += 1;
    samples += 1;
    sum += v.total();
    sum_sq += static_cast<double>(v.total()) * v.total();
}

void SampleStats::merge(const SampleStats &other) {
    for (const auto &[n, c] : other.histogram) {
        histogram[n] += c;
    }
    samples += other.samples;
    sum += other.sum;
    sum_sq += other.sum_sq;
}

double SampleStats::mean_n() const {
    return samples == 0 ? 0.0 : sum / samples;
}

double SampleStats::var_n() const {
    if (samples < 2) {
        return 0.0;
    }
    const double mean = mean_n();
    return (sum_sq - samples * mean * mean) / (samples - 1);
}

std::string sample_to_json(const OccupationVector &v) {
    nlohmann::json occ = nlohmann::json::array();
    for (const auto &p : v.occupied()) {
        occ.push_back({p.mode + 1, p.count});
    }
    nlohmann::json j;
    j["modes"] = v.modes();
    j["occ"] = std::move(occ);
    return j.dump();
}

OccupationVector sample_from_json(const std::string &line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::DomainError, std::string("bad sample line: ") + e.what());
    }
    if (!j.is_object() || !j.contains("modes") || !j.contains("occ")) {
        fail(ErrorKind::DomainError, "sample line needs \"modes\" and \"occ\"");
    }
    std::vector<ModeCount> pairs;
    for (const auto &item : j["occ"]) {
        if (!item.is_array() || item.size() != 2) {
            fail(ErrorKind::DomainError, "occ entries are [index, count] pairs");
        }
        pairs.push_back({item[0].get<int>() - 1, item[1].get<int>()});
    }
    return OccupationVector::from_pairs(j["modes"].get<int>(), std::move(pairs));
}

}  // namespace scatmet
