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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "scatmet/combinatorics.h"
#include "scatmet/error.h"
#include "scatmet/qfi_closed.h"

namespace scatmet {

namespace {

constexpr std::size_t kBlockEntries = 4000000;

struct WalkerState {
    Rng rng;
    double total = 0.0;
    double sum = 0.0;
    double sum_sq = 0.0;
};

double quantile_sorted(const std::vector<double> &sorted, double level) {
    const double h = (sorted.size() - 1) * level;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

// Runs body(begin, end) over [0, n) split into `threads` contiguous chunks.
template <typename Body>
void parallel_chunks(int n, int threads, Body body) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t) {
        const int begin = static_cast<int>(static_cast<long long>(n) * t / threads);
        const int end = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
        pool.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace

Comparison parse_comparison(std::string_view text) {
    if (text == "sep_vs_sym" || text == "sep") {
        return Comparison::sep_vs_sym;
    }
    if (text == "uni_vs_sym" || text == "uni") {
        return Comparison::uni_vs_sym;
    }
    fail(ErrorKind::DomainError, "unknown comparison '" + std::string(text) + "' (use sep_vs_sym or uni_vs_sym)");
}

std::string_view to_string(Comparison pair) {
    return pair == Comparison::sep_vs_sym ? "sep_vs_sym" : "uni_vs_sym";
}

double delta_f(const OccupationVector &sample, Comparison pair) {
    const NetworkKind first = pair == Comparison::sep_vs_sym ? NetworkKind::separable : NetworkKind::uniform;
    if (!symmetric_size_supported(sample.modes())) {
        fail(ErrorKind::UnsupportedSize, "walkers need a mode count supported by the symmetric network");
    }
    return qfi_excess(first, sample) - qfi_excess(NetworkKind::symmetric, sample);
}

WalkerConfig WalkerConfig::from_mean_photons(int m, double n_avg) {
    WalkerConfig c;
    c.modes = m;
    c.n_avg = n_avg;
    c.chi = chi_for_mean_photons(m, n_avg);
    return c;
}

WalkerConfig WalkerConfig::from_chi(int m, double chi, bool postselect_single) {
    WalkerConfig c;
    c.modes = m;
    c.chi = chi;
    c.postselect_single = postselect_single;
    c.n_avg = c.source().mean_photons();
    return c;
}

void WalkerConfig::validate() const {
    source().validate();
    require_feasible_postselection(source());
    if (!symmetric_size_supported(modes) || modes < 4) {
        fail(ErrorKind::UnsupportedSize, "walkers need m >= 4 with m/2 a power of two, got " + std::to_string(modes));
    }
    if (walkers < 1 || kmax < 1) {
        fail(ErrorKind::DomainError, "walkers and kmax must be >= 1");
    }
    const double samples = static_cast<double>(walkers) * kmax;
    if (samples > kMaxTotalSamples) {
        fail(ErrorKind::TooLarge, "walkers * kmax = " + std::to_string(samples) + " exceeds " +
                                      std::to_string(kMaxTotalSamples) + " samples; shrink --walkers or --kmax");
    }
    if (traces && samples > kMaxTraceEntries) {
        fail(ErrorKind::TooLarge, "traces for walkers * kmax = " + std::to_string(samples) + " exceed " +
                                      std::to_string(kMaxTraceEntries) +
                                      " entries; drop --traces or shrink --walkers / --kmax");
    }
}

int resolve_threads(int requested) {
    int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(threads, 1);
    if (const char *cap = std::getenv("SCATTERSHOT_THREADS")) {
        const int limit = std::atoi(cap);
        if (limit > 0) {
            threads = std::min(threads, limit);
        }
    }
    return threads;
}

EnsembleSummary run_ensemble(const WalkerConfig &config) {
    config.validate();
    const int walkers = config.walkers;
    const int kmax = config.kmax;
    const SqueezerSource source = config.source();
    const int threads = resolve_threads(config.threads);

    std::vector<WalkerState> state;
    state.reserve(walkers);
    for (int w = 0; w < walkers; ++w) {
        state.push_back({make_rng(config.seed, static_cast<std::uint64_t>(w))});
    }

    EnsembleSummary out;
    out.kmax = kmax;
    out.walkers = walkers;
    out.p_advantage.resize(kmax);
    out.quantiles.resize(kmax);
    if (config.traces) {
        out.records.resize(walkers);
        for (int w = 0; w < walkers; ++w) {
            out.records[w].walker_id = w;
            out.records[w].delta_f.resize(kmax);
            out.records[w].delta_f_tot.resize(kmax);
        }
    }

    const int block = static_cast<int>(std::clamp<std::size_t>(kBlockEntries / walkers, 1, kmax));
    // totals[j * walkers + w] = ΔF_tot of walker w at step k0 + j.
    std::vector<double> totals(static_cast<std::size_t>(block) * walkers);
    std::vector<SampleStats> photon_stats(threads);
    std::vector<PostselectStats> post_stats(threads);

    for (int k0 = 0; k0 < kmax; k0 += block) {
        const int steps = std::min(block, kmax - k0);
        const int chunks = std::max(1, std::min(threads, walkers));
        parallel_chunks(walkers, chunks, [&](int begin, int end) {
            // Chunk index is recovered from begin so each thread owns one stats slot.
            int slot = 0;
            while (static_cast<int>(static_cast<long long>(walkers) * (slot + 1) / chunks) <= begin) {
                ++slot;
            }
            for (int w = begin; w < end; ++w) {
                WalkerState &ws = state[w];
                for (int j = 0; j < steps; ++j) {
                    const OccupationVector v = draw(source, ws.rng, &post_stats[slot]);
                    photon_stats[slot].add(v);
                    const double d = delta_f(v, config.pair);
                    ws.total += d;
                    ws.sum += d;
                    ws.sum_sq += d * d;
                    totals[static_cast<std::size_t>(j) * walkers + w] = ws.total;
                    if (config.traces) {
                        out.records[w].delta_f[k0 + j] = d;
                        out.records[w].delta_f_tot[k0 + j] = ws.total;
                    }
                }
            }
        });
        parallel_chunks(steps, threads, [&](int begin, int end) {
            std::vector<double> column(walkers);
            for (int j = begin; j < end; ++j) {
                const double *col = &totals[static_cast<std::size_t>(j) * walkers];
                int positive = 0;
                for (int w = 0; w < walkers; ++w) {
                    positive += col[w] > 0.0;
                }
                column.assign(col, col + walkers);
                std::sort(column.begin(), column.end());
                auto &q = out.quantiles[k0 + j];
                for (std::size_t l = 0; l < kQuantileLevels.size(); ++l) {
                    q[l] = quantile_sorted(column, kQuantileLevels[l]);
                }
                out.p_advantage[k0 + j] = static_cast<double>(positive) / walkers;
            }
        });
    }

    for (int t = 0; t < threads; ++t) {
        out.photons.merge(photon_stats[t]);
        out.postselection.attempts += post_stats[t].attempts;
        out.postselection.accepted += post_stats[t].accepted;
    }
    // Reduce in walker order so the floating-point sum is schedule independent.
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto &ws : state) {
        sum += ws.sum;
        sum_sq += ws.sum_sq;
    }
    const double count = static_cast<double>(walkers) * kmax;
    out.mean_increment = sum / count;
    const double var = count > 1 ? std::max(0.0, (sum_sq - count * out.mean_increment * out.mean_increment) / (count - 1))
                                 : 0.0;
    out.stderr_increment = std::sqrt(var / count);
    out.empirical_kadv = empirical_crossing(out.p_advantage);
    return out;
}

double advantage_probability_analytic(double m, double n_avg, double k) {
    if (k < 0) {
        fail(ErrorKind::DomainError, "sample count k must be >= 0");
    }
    if (!(n_avg >= 0) || n_avg > m / 2) {
        fail(ErrorKind::DomainError, "analytic advantage probability needs 0 <= n_avg <= m/2");
    }
    if (k == 0) {
        return 0.0;
    }
    return -std::expm1(k * log_no_pair_probability(m, n_avg));
}

int region_label(double m, double n_avg, long long k) {
    if (!(n_avg >= 2.0) || m < 2 || k < 0) {
        fail(ErrorKind::DomainError, "region_label needs n_avg >= 2, m >= 2, k >= 0");
    }
    const double x = static_cast<double>(k) * n_avg * (n_avg - 1) / (2 * (m - 1));
    return static_cast<int>(std::floor(x)) + 1;
}

double empirical_crossing(const std::vector<double> &p_advantage) {
    double prev = 0.0;
    for (std::size_t i = 0; i < p_advantage.size(); ++i) {
        const double cur = p_advantage[i];
        if (prev < 0.5 && cur >= 0.5) {
            return static_cast<double>(i) + (0.5 - prev) / (cur - prev);
        }
        prev = cur;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double total_variation(const std::vector<double> &p) {
    double acc = 0.0;
    double prev = 0.0;
    for (double x : p) {
        acc += std::abs(x - prev);
        prev = x;
    }
    return acc;
}

std::pair<double, double> binomial_band(int trials, double p, double level) {
    if (trials < 1 || !(p >= 0 && p <= 1) || !(level > 0 && level < 1)) {
        fail(ErrorKind::DomainError, "binomial_band needs trials >= 1, p in [0, 1], level in (0, 1)");
    }
    if (p == 0.0) {
        return {0.0, 0.0};
    }
    if (p == 1.0) {
        return {1.0, 1.0};
    }
    const double tail = (1 - level) / 2;
    double cdf = 0.0;
    int lo = -1;
    int hi = trials;
    for (int s = 0; s <= trials; ++s) {
        cdf += std::exp(log_binomial(trials, s) + s * std::log(p) + (trials - s) * std::log1p(-p));
        if (lo < 0 && cdf >= tail) {
            lo = s;
        }
        if (cdf >= 1 - tail) {
            hi = s;
            break;
        }
    }
    return {static_cast<double>(lo) / trials, static_cast<double>(hi) / trials};
}

}  // namespace scatmet
