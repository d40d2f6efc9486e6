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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "scatmet/combinatorics.h"
#include "scatmet/error.h"

namespace scatmet {

namespace {

constexpr double kMaxArrangements = 4.0e6;

void require_even_modes(const OccupationVector &nvec, const char *what) {
    if (nvec.modes() < 2 || nvec.modes() % 2 != 0) {
        fail(ErrorKind::OddModeCount, std::string(what) + " needs an even mode count, got " +
                                          std::to_string(nvec.modes()));
    }
}

double separable_excess(const OccupationVector &nvec) {
    require_even_modes(nvec, "separable QFI");
    const auto &occ = nvec.occupied();
    std::int64_t pairs = 0;
    for (size_t i = 0; i + 1 < occ.size(); ++i) {
        if (occ[i].mode % 2 == 0 && occ[i + 1].mode == occ[i].mode + 1) {
            pairs += static_cast<std::int64_t>(occ[i].count) * occ[i + 1].count;
        }
    }
    return 2.0 * static_cast<double>(pairs);
}

double uniform_excess(const OccupationVector &nvec) {
    require_even_modes(nvec, "uniform QFI");
    const double m = nvec.modes();
    double acc = 0.0;
    // 1-based odd modes are 0-based even modes; the angle only depends on the
    // index difference, and sin^2 is pi-periodic so the sign of the difference
    // is irrelevant.
    for (const auto &a : nvec.occupied()) {
        if (a.mode % 2 != 0) {
            continue;
        }
        for (const auto &b : nvec.occupied()) {
            if (b.mode % 2 != 1) {
                continue;
            }
            const double sn = std::sin(std::numbers::pi * static_cast<double>(b.mode - a.mode) / m);
            acc += static_cast<double>(a.count) * b.count / (sn * sn);
        }
    }
    return 8.0 / (m * m) * acc;
}

double symmetric_excess(const OccupationVector &nvec) {
    if (nvec.modes() < 2) {
        fail(ErrorKind::UnsupportedSize, "symmetric QFI needs m >= 2");
    }
    const std::int64_t n = nvec.total();
    const std::int64_t cross = n * n - nvec.sum_of_squares();
    return static_cast<double>(cross) / (nvec.modes() - 1);
}

}  // namespace

double qfi_separable(const OccupationVector &nvec) {
    return nvec.total() + separable_excess(nvec);
}

double qfi_uniform(const OccupationVector &nvec) {
    return nvec.total() + uniform_excess(nvec);
}

double qfi_symmetric(const OccupationVector &nvec) {
    return nvec.total() + symmetric_excess(nvec);
}

double qfi_excess(NetworkKind kind, const OccupationVector &nvec) {
    switch (kind) {
        case NetworkKind::mzi:
            if (nvec.modes() != 2) {
                fail(ErrorKind::UnsupportedSize, "mzi has exactly 2 modes");
            }
            return separable_excess(nvec);
        case NetworkKind::separable:
            return separable_excess(nvec);
        case NetworkKind::uniform:
            return uniform_excess(nvec);
        case NetworkKind::symmetric:
            return symmetric_excess(nvec);
    }
    fail(ErrorKind::DomainError, "unknown network kind");
}

double qfi_closed(NetworkKind kind, const OccupationVector &nvec) {
    return nvec.total() + qfi_excess(kind, nvec);
}

double pair_probability(int m, int n, int x) {
    if (m < 2 || m % 2 != 0) {
        fail(ErrorKind::DomainError, "pair_probability needs an even m");
    }
    if (n < 0 || n > m || x < 0 || 2 * x > n) {
        fail(ErrorKind::DomainError, "pair_probability needs 0 <= n <= m and 0 <= x <= n/2");
    }
    const int half = m / 2;
    if (x > half || n - 2 * x > half - x) {
        return 0.0;
    }
    auto total = binomial_exact(m, n);
    auto pairs = binomial_exact(half, x);
    auto singles = binomial_exact(half - x, n - 2 * x);
    if (total && pairs && singles && n - 2 * x < 63) {
        const long double numer =
            static_cast<long double>(*pairs) * static_cast<long double>(*singles) * std::ldexp(1.0L, n - 2 * x);
        return static_cast<double>(numer / static_cast<long double>(*total));
    }
    const double log_p = log_binomial(half, x) + log_binomial(half - x, n - 2 * x) +
                         (n - 2 * x) * std::numbers::ln2 - log_binomial(m, n);
    return std::exp(log_p);
}

double avg_qfi_separable_single_photons(int m, int n) {
    if (n < 0 || n > m) {
        fail(ErrorKind::DomainError, "avg QFI needs 0 <= n <= m");
    }
    double acc = 0.0;
    for (int x = 0; 2 * x <= n; ++x) {
        acc += (n + 2.0 * x) * pair_probability(m, n, x);
    }
    return acc;
}

double average_qfi_exact(NetworkKind kind, const OccupationVector &nvec) {
    std::vector<int> counts = nvec.dense();
    std::sort(counts.begin(), counts.end());
    // Number of distinct arrangements: m! / prod(multiplicity!).
    double arrangements = 1.0;
    {
        int run = 0;
        for (size_t i = 0; i < counts.size(); ++i) {
            run = (i > 0 && counts[i] == counts[i - 1]) ? run + 1 : 1;
            arrangements = arrangements * static_cast<double>(i + 1) / run;
            if (arrangements > kMaxArrangements) {
                fail(ErrorKind::TooLarge, "more than 4e6 distinct arrangements of " + nvec.to_string());
            }
        }
    }
    // Neumaier summation in a fixed (lexicographic) order keeps the mean
    // deterministic and accurate to a few ulps.
    double sum = 0.0;
    double comp = 0.0;
    std::size_t seen = 0;
    do {
        const double value = qfi_excess(kind, OccupationVector::from_dense(counts));
        const double t = sum + value;
        comp += std::abs(sum) >= std::abs(value) ? (sum - t) + value : (value - t) + sum;
        sum = t;
        ++seen;
    } while (std::next_permutation(counts.begin(), counts.end()));
    return nvec.total() + (sum + comp) / static_cast<double>(seen);
}

double cosecant_sum(int m, int j) {
    if (m < 2 || m % 2 != 0 || j < 1 || j > m / 2) {
        fail(ErrorKind::DomainError, "cosecant_sum needs even m and 1 <= j <= m/2");
    }
    double acc = 0.0;
    for (int k = 1; k <= m / 2; ++k) {
        const double sn = std::sin(std::numbers::pi * (2.0 * k - 2.0 * j + 1.0) / m);
        acc += 1.0 / (sn * sn);
    }
    return acc;
}

double kadv(double m, double n_avg) {
    if (!(n_avg >= 1.0) || n_avg > m / 2) {
        fail(ErrorKind::DomainError, "kadv needs 1 <= n_avg <= m/2");
    }
    const double log_p0 = log_no_pair_probability(m, n_avg);
    if (log_p0 >= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::log(0.5) / log_p0;
}

double region_bound(double m, double n_avg) {
    if (!(n_avg >= 2.0)) {
        fail(ErrorKind::DomainError, "region_bound needs n_avg >= 2");
    }
    return 2.0 * (m - 1) / (n_avg * (n_avg - 1));
}

}  // namespace scatmet
