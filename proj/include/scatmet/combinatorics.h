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

#ifndef SCATMET_COMBINATORICS_H
#define SCATMET_COMBINATORICS_H

#include <cstdint>
#include <optional>

namespace scatmet {

/// C(n, k) as an exact integer, or nullopt if it does not fit in 64 bits.
/// Returns 0 for k < 0 or k > n.
std::optional<std::uint64_t> binomial_exact(std::int64_t n, std::int64_t k);

/// log C(n, k) for real arguments via lgamma.
double log_binomial(double n, double k);

/// C(n, k) as a double: exact integer arithmetic below 1e15, log-gamma above.
double binomial(std::int64_t n, std::int64_t k);

/// log of the probability that n single photons spread uniformly over m modes
/// leave every mode pair (2p, 2p+1) at most singly occupied:
/// log[2^n C(m/2, n) / C(m, n)]. Integer n uses a product form that stays
/// accurate for m = 2^18; real n falls back to log-gamma.
double log_no_pair_probability(double m, double n);

}  // namespace scatmet

#endif
