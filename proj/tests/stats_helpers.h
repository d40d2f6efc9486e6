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

#ifndef SCATMET_TESTS_STATS_HELPERS_H
#define SCATMET_TESTS_STATS_HELPERS_H

#include <vector>

#include <boost/math/special_functions/gamma.hpp>

namespace scatmet_test {

/// Pearson chi-square p-value of `observed` against expected probabilities,
/// pooling bins with an expected count below 5 into their neighbour.
inline double chi_square_p_value(const std::vector<double> &observed, const std::vector<double> &probs, double total) {
    double stat = 0.0;
    int bins = 0;
    double obs_acc = 0.0;
    double exp_acc = 0.0;
    for (size_t i = 0; i < observed.size(); ++i) {
        obs_acc += observed[i];
        exp_acc += probs[i] * total;
        const bool last = i + 1 == observed.size();
        if (exp_acc >= 5.0 || last) {
            if (last && exp_acc < 5.0 && bins > 0) {
                // Tail too thin for its own bin; it is dropped from the test.
                break;
            }
            stat += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
            ++bins;
            obs_acc = 0.0;
            exp_acc = 0.0;
        }
    }
    if (bins < 2) {
        return 1.0;
    }
    return boost::math::gamma_q((bins - 1) / 2.0, stat / 2.0);
}

/// Two-sample chi-square homogeneity p-value for histograms of equal total.
inline double two_sample_p_value(const std::vector<double> &a, const std::vector<double> &b) {
    double stat = 0.0;
    int bins = 0;
    double sa = 0.0;
    double sb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa + sb >= 10.0 || i + 1 == a.size()) {
            if (sa + sb > 0) {
                stat += (sa - sb) * (sa - sb) / (sa + sb);
                ++bins;
            }
            sa = sb = 0.0;
        }
    }
    if (bins < 2) {
        return 1.0;
    }
    return boost::math::gamma_q((bins - 1) / 2.0, stat / 2.0);
}

}  // namespace scatmet_test

#endif
