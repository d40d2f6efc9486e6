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

#include "scatmet/combinatorics.h"

#include <cmath>
#include <numbers>

#include "scatmet/error.h"

namespace scatmet {

std::optional<std::uint64_t> binomial_exact(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    unsigned __int128 acc = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        // acc * (n - i) / (i + 1) is always an integer: it equals C(n, i + 1).
        acc = acc * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX)) {
            return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(acc);
}

double log_binomial(double n, double k) {
    if (k < 0 || k > n) {
        fail(ErrorKind::DomainError, "log_binomial needs 0 <= k <= n");
    }
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0.0;
    }
    if (auto exact = binomial_exact(n, k); exact && *exact < 1000000000000000ULL) {
        return static_cast<double>(*exact);
    }
    return std::exp(log_binomial(static_cast<double>(n), static_cast<double>(k)));
}

double log_no_pair_probability(double m, double n) {
    if (n < 0 || n > m / 2) {
        fail(ErrorKind::DomainError, "no-pair probability needs 0 <= n <= m/2");
    }
    if (n == std::floor(n)) {
        // prod_{i<n} 2 (m/2 - i) / (m - i) = prod_{i<n} (1 - i / (m - i))
        double acc = 0.0;
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            acc += std::log1p(-static_cast<double>(i) / (m - static_cast<double>(i)));
        }
        return acc;
    }
    return n * std::numbers::ln2 + log_binomial(m / 2, n) - log_binomial(m, n);
}

}  // namespace scatmet
