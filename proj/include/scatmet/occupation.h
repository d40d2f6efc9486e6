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

#ifndef SCATMET_OCCUPATION_H
#define SCATMET_OCCUPATION_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scatmet {

struct ModeCount {
    int mode;  // 0-based
    int count;

    bool operator==(const ModeCount &) const = default;
};

/// Photon counts |n_1 ... n_m>. Stored as sorted (mode, count) pairs with
/// count > 0, so a vacuum over 2^18 modes costs nothing. Text and JSON forms
/// use 1-based mode indices.
class OccupationVector {
   public:
    explicit OccupationVector(int modes = 0);

    static OccupationVector from_dense(std::span<const int> counts);
    /// `pairs` use 0-based modes, any order; duplicate modes are summed.
    static OccupationVector from_pairs(int modes, std::vector<ModeCount> pairs);

    /// Digit-per-mode ("1100") or sparse 1-based "idx:count,idx:count".
    /// The sparse form needs `modes`; the digit form infers it when 0.
    static OccupationVector parse(std::string_view text, int modes = 0);

    int modes() const noexcept {
        return modes_;
    }
    int total() const noexcept {
        return total_;
    }
    int count(int mode) const;
    int max_count() const noexcept;
    bool single_photon() const noexcept {
        return max_count() <= 1;
    }
    const std::vector<ModeCount> &occupied() const noexcept {
        return occupied_;
    }
    std::vector<int> dense() const;

    /// Moves the photons of mode j to mode perm[j].
    OccupationVector permuted(std::span<const int> perm) const;

    /// sum_j n_j^2, used by the pairwise-product sums.
    std::int64_t sum_of_squares() const noexcept;

    /// Digit form when m <= 64 and every count <= 9, else the sparse form.
    std::string to_string() const;
    std::string to_sparse_string() const;

    bool operator==(const OccupationVector &) const = default;

   private:
    int modes_ = 0;
    int total_ = 0;
    std::vector<ModeCount> occupied_;
};

}  // namespace scatmet

#endif
