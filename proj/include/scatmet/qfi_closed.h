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

// Closed-form quantum Fisher information of Fock inputs, in rad^-2.
// Every value is the photon number n plus a nonnegative excess.

#ifndef SCATMET_QFI_CLOSED_H
#define SCATMET_QFI_CLOSED_H

#include "scatmet/netbuild.h"
#include "scatmet/occupation.h"

namespace scatmet {

/// n + 2 sum_p n_{2p} n_{2p+1}
double qfi_separable(const OccupationVector &nvec);

/// n + (8/m^2) sum over (odd, even) 1-based mode pairs of n_a n_b / sin^2(pi (b - a) / m)
double qfi_uniform(const OccupationVector &nvec);

/// n + (1/(m-1)) sum_{j != k} n_j n_k
double qfi_symmetric(const OccupationVector &nvec);

double qfi_closed(NetworkKind kind, const OccupationVector &nvec);

/// Excess terms only (QFI - n). Used by the walker ensembles, where the shot
/// noise term cancels in every difference.
double qfi_excess(NetworkKind kind, const OccupationVector &nvec);

/// Probability that n single photons placed uniformly over m modes form
/// exactly x doubly occupied separable pairs.
double pair_probability(int m, int n, int x);

/// sum_x (n + 2x) P(x)
double avg_qfi_separable_single_photons(int m, int n);

/// Exact mean of the closed-form QFI over all distinct rearrangements of the
/// counts in `nvec`. Throws TooLarge beyond four million arrangements.
double average_qfi_exact(NetworkKind kind, const OccupationVector &nvec);

/// sum_{k=1}^{m/2} 1 / sin^2(pi (2k - 2j + 1) / m), with 1 <= j <= m/2.
double cosecant_sum(int m, int j);

/// Largest sample count at which the separable network is still less likely
/// than not to have seen a doubly occupied pair. +inf when n_avg <= 1.
double kadv(double m, double n_avg);

/// Upper edge 2(m-1) / (n_avg (n_avg - 1)) of the first advantage region.
double region_bound(double m, double n_avg);

}  // namespace scatmet

#endif
