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

#include "scatmet/fockspace.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "scatmet/error.h"
#include "scatmet/qfi_closed.h"

namespace scatmet {

namespace {

double factorial(int n) {
    return std::tgamma(n + 1.0);
}

std::vector<int> expand_modes(const OccupationVector &v) {
    std::vector<int> out;
    out.reserve(v.total());
    for (const auto &p : v.occupied()) {
        out.insert(out.end(), p.count, p.mode);
    }
    return out;
}

double richardson_derivative(const std::function<double(double)> &f, double x, double delta) {
    const double d1 = (f(x + delta) - f(x - delta)) / (2 * delta);
    const double d2 = (f(x + delta / 2) - f(x - delta / 2)) / delta;
    return (4 * d2 - d1) / 3;
}

}  // namespace

FockBasis::FockBasis(int modes, int photons) : modes_(modes), photons_(photons) {
    if (modes < 1 || photons < 0) {
        fail(ErrorKind::DomainError, "Fock basis needs m >= 1 and n >= 0");
    }
    const std::uint64_t dim = dimension(modes, photons);
    if (dim > kMaxFockStates) {
        fail(ErrorKind::TooLarge, "Fock basis of " + std::to_string(modes) + " modes and " + std::to_string(photons) +
                                      " photons exceeds " + std::to_string(kMaxFockStates) + " states");
    }
    size_ = static_cast<std::size_t>(dim);
    ways_.assign(static_cast<std::size_t>(modes + 1) * (photons + 1), 0);
    ways_[0] = 1;  // zero modes hold zero photons in one way
    for (int k = 1; k <= modes; ++k) {
        for (int r = 0; r <= photons; ++r) {
            // Stars and bars recursion: the first of k modes takes c photons.
            std::uint64_t acc = 0;
            for (int c = 0; c <= r; ++c) {
                acc += ways(k - 1, r - c);
            }
            ways_[static_cast<std::size_t>(k) * (photons + 1) + r] = acc;
        }
    }
}

std::uint64_t FockBasis::dimension(int modes, int photons) {
    // C(n + m - 1, n) by the multiplicative formula with saturation.
    unsigned __int128 acc = 1;
    for (int i = 1; i <= photons; ++i) {
        acc = acc * static_cast<unsigned>(modes - 1 + i) / static_cast<unsigned>(i);
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

std::size_t FockBasis::index(const int *counts) const {
    std::size_t rank = 0;
    int remaining = photons_;
    for (int j = 0; j < modes_ - 1; ++j) {
        // States with a smaller count in mode j come first.
        for (int c = 0; c < counts[j]; ++c) {
            rank += ways(modes_ - j - 1, remaining - c);
        }
        remaining -= counts[j];
    }
    return rank;
}

std::size_t FockBasis::index(const OccupationVector &v) const {
    if (v.modes() != modes_ || v.total() != photons_) {
        fail(ErrorKind::DomainError, "state " + v.to_string() + " is not in this Fock basis");
    }
    const std::vector<int> counts = v.dense();
    return index(counts.data());
}

void FockBasis::unrank(std::size_t index, int *out) const {
    if (index >= size_) {
        fail(ErrorKind::DomainError, "Fock index out of range");
    }
    int remaining = photons_;
    for (int j = 0; j < modes_ - 1; ++j) {
        int c = 0;
        while (index >= ways(modes_ - j - 1, remaining - c)) {
            index -= ways(modes_ - j - 1, remaining - c);
            ++c;
        }
        out[j] = c;
        remaining -= c;
    }
    out[modes_ - 1] = remaining;
}

OccupationVector FockBasis::state(std::size_t index) const {
    std::vector<int> counts(modes_);
    unrank(index, counts.data());
    return OccupationVector::from_dense(counts);
}

SparseOperator second_quantize(const ComplexMatrix &h, const FockBasis &basis) {
    const int m = basis.modes();
    if (h.rows() != m || h.cols() != m) {
        fail(ErrorKind::DomainError, "generator size does not match the Fock basis");
    }
    std::vector<Eigen::Triplet<Complex>> triplets;
    std::vector<int> counts(m);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        basis.unrank(col, counts.data());
        for (int k = 0; k < m; ++k) {
            if (counts[k] == 0) {
                continue;
            }
            for (int j = 0; j < m; ++j) {
                if (h(j, k) == Complex(0.0)) {
                    continue;
                }
                if (j == k) {
                    triplets.emplace_back(col, col, h(k, k) * static_cast<double>(counts[k]));
                    continue;
                }
                const double amp = std::sqrt(static_cast<double>(counts[k]) * (counts[j] + 1));
                counts[k] -= 1;
                counts[j] += 1;
                triplets.emplace_back(basis.index(counts.data()), col, h(j, k) * amp);
                counts[j] -= 1;
                counts[k] += 1;
            }
        }
    }
    SparseOperator op(basis.size(), basis.size());
    op.setFromTriplets(triplets.begin(), triplets.end());
    return op;
}

double qfi_oracle_analytic(const ComplexMatrix &h, const OccupationVector &input) {
    if (h.rows() != input.modes()) {
        fail(ErrorKind::DomainError, "generator size does not match the input");
    }
    // For a product Fock state only a_j† a_k a_k† a_j (j != k) survives in the
    // variance; the diagonal number terms have zero spread.
    double acc = 0.0;
    for (const auto &pj : input.occupied()) {
        for (int k = 0; k < input.modes(); ++k) {
            if (k == pj.mode) {
                continue;
            }
            acc += std::norm(h(k, pj.mode)) * pj.count * (input.count(k) + 1.0);
        }
    }
    return 4.0 * acc;
}

QfiOracleResult qfi_oracle(const ComplexMatrix &h, const OccupationVector &input) {
    const FockBasis basis(input.modes(), input.total());
    const SparseOperator op = second_quantize(h, basis);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(basis.size());
    const std::size_t at = basis.index(input);
    psi(at) = 1.0;
    const Eigen::VectorXcd h_psi = op * psi;
    const Eigen::VectorXcd hh_psi = op * h_psi;
    const double mean = psi.dot(h_psi).real();
    const double second = psi.dot(hh_psi).real();
    return {4.0 * (second - mean * mean), qfi_oracle_analytic(h, input)};
}

Complex permanent(const ComplexMatrix &a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) {
        fail(ErrorKind::DomainError, "permanent needs a square matrix");
    }
    if (n > kMaxPermanentSize) {
        fail(ErrorKind::TooLarge, "permanent of size " + std::to_string(n) + " exceeds the cap of " +
                                      std::to_string(kMaxPermanentSize));
    }
    if (n == 0) {
        return 1.0;
    }
    std::vector<Complex> row_sums(n, 0.0);
    std::vector<bool> in_set(n, false);
    Complex total = 0.0;
    int set_size = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t g = 1; g < subsets; ++g) {
        const int col = __builtin_ctzll(g);
        const double dir = in_set[col] ? -1.0 : 1.0;
        in_set[col] = !in_set[col];
        set_size += in_set[col] ? 1 : -1;
        Complex prod = 1.0;
        for (int i = 0; i < n; ++i) {
            row_sums[i] += dir * a(i, col);
            prod *= row_sums[i];
        }
        total += (set_size % 2 == 0) ? prod : -prod;
    }
    return (n % 2 == 0) ? total : -total;
}

Complex transition_amplitude(const ComplexMatrix &u, const OccupationVector &input, const OccupationVector &output) {
    if (input.total() != output.total()) {
        fail(ErrorKind::DomainError, "input and output photon numbers differ");
    }
    if (input.modes() != output.modes() || input.modes() != u.rows()) {
        fail(ErrorKind::DomainError, "mode counts of the network and the states differ");
    }
    if (input.total() > kMaxAmplitudePhotons) {
        fail(ErrorKind::TooLarge, "transition amplitudes are limited to " + std::to_string(kMaxAmplitudePhotons) +
                                      " photons");
    }
    const std::vector<int> cols = expand_modes(input);
    const std::vector<int> rows = expand_modes(output);
    const int n = static_cast<int>(cols.size());
    ComplexMatrix sub(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            sub(r, c) = u(rows[r], cols[c]);
        }
    }
    double norm = 1.0;
    for (const auto &p : input.occupied()) {
        norm *= factorial(p.count);
    }
    for (const auto &p : output.occupied()) {
        norm *= factorial(p.count);
    }
    return permanent(sub) / std::sqrt(norm);
}

std::vector<Outcome> outcome_distribution(const ComplexMatrix &u, const OccupationVector &input) {
    const FockBasis basis(input.modes(), input.total());
    std::vector<Outcome> out;
    out.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        OccupationVector state = basis.state(i);
        const double p = std::norm(transition_amplitude(u, input, state));
        out.push_back({std::move(state), p});
    }
    return out;
}

UnitaryFamily family_of(NetworkKind kind, int m) {
    NetworkSpec{kind, m, 0.0}.validate();
    return [kind, m](double phi) { return network_unitary({kind, m, phi}); };
}

double equal_amplitude(const UnitaryFamily &family, const OccupationVector &input, double phi) {
    const Complex a = transition_amplitude(family(phi), input, input);
    if (std::abs(a.imag()) > 1e-12) {
        fail(ErrorKind::DomainError, "the input = output amplitude is complex for this network; the binary "
                                     "measurement formula needs a real amplitude");
    }
    return a.real();
}

double binary_measurement_fisher(const UnitaryFamily &family, const OccupationVector &input, double phi, double delta) {
    const double p = equal_amplitude(family, input, phi);
    if (1.0 - p * p < 1e-13) {
        fail(ErrorKind::LimitPoint, "p = ±1 at phi = " + std::to_string(phi) + "; evaluate at small phi and extrapolate");
    }
    const double dp =
        richardson_derivative([&](double x) { return equal_amplitude(family, input, x); }, phi, delta);
    return 4.0 * dp * dp / (1.0 - p * p);
}

double full_distribution_fisher(const UnitaryFamily &family, const OccupationVector &input, double phi, double delta) {
    auto probs = [&](double x) {
        std::vector<double> out;
        for (const auto &o : outcome_distribution(family(x), input)) {
            out.push_back(o.probability);
        }
        return out;
    };
    const std::vector<double> p0 = probs(phi);
    const std::vector<double> p_plus = probs(phi + delta);
    const std::vector<double> p_minus = probs(phi - delta);
    const std::vector<double> p_plus_half = probs(phi + delta / 2);
    const std::vector<double> p_minus_half = probs(phi - delta / 2);
    double acc = 0.0;
    for (std::size_t i = 0; i < p0.size(); ++i) {
        if (p0[i] < 1e-15) {
            continue;
        }
        const double d1 = (p_plus[i] - p_minus[i]) / (2 * delta);
        const double d2 = (p_plus_half[i] - p_minus_half[i]) / delta;
        const double d = (4 * d2 - d1) / 3;
        acc += d * d / p0[i];
    }
    return acc;
}

double limit_at_zero(const std::function<double(double)> &f, double phi1, double phi2) {
    const double r2 = (phi1 / phi2) * (phi1 / phi2);
    return (r2 * f(phi2) - f(phi1)) / (r2 - 1);
}

AmplitudeExpansion amplitude_expansion_check(int m, const OccupationVector &input) {
    if (!input.single_photon() || input.total() < 1 || input.total() > 8) {
        fail(ErrorKind::DomainError, "amplitude expansion needs a 0/1 input with 1 <= n <= 8");
    }
    if (input.modes() != m) {
        fail(ErrorKind::DomainError, "input mode count differs from m");
    }
    const int n = input.total();
    const int terms = n / 2 + 1;
    const int samples = 48;
    Eigen::MatrixXd design(samples, terms);
    Eigen::VectorXd target(samples);
    for (int i = 0; i < samples; ++i) {
        const double phi = 0.05 + 3.0 * i / (samples - 1);
        const double c = std::cos(phi / 2);
        const double t = std::sin(phi / 2);
        for (int j = 0; j < terms; ++j) {
            design(i, j) = std::pow(c, n - 2 * j) * std::pow(t, 2 * j);
        }
        target(i) = transition_amplitude(symmetric_unitary(m, phi), input, input).real();
    }
    const Eigen::VectorXd fit = design.colPivHouseholderQr().solve(target);
    AmplitudeExpansion out;
    out.n = n;
    out.residual = (design * fit - target).cwiseAbs().maxCoeff();
    if (!fit.allFinite() || out.residual > 1e-9) {
        fail(ErrorKind::NumericalError, "amplitude fit residual " + std::to_string(out.residual));
    }
    // Rescale from powers of sin(phi/2) to powers of sin(phi/2)/sqrt(m-1).
    for (int j = 0; j < terms; ++j) {
        out.coefficients.push_back(fit(j) * std::pow(m - 1.0, j));
    }
    return out;
}

double odd_skew_permanent_check(int d, int trials, std::uint64_t seed) {
    constexpr int kModes = 16;
    if (d < 1 || d % 2 == 0 || d > 11) {
        fail(ErrorKind::DomainError, "odd_skew_permanent_check needs odd d <= 11");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.1, 3.0);
    std::vector<int> modes(kModes);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const ComplexMatrix y = symmetric_unitary(kModes, phase(rng));
        std::iota(modes.begin(), modes.end(), 0);
        std::shuffle(modes.begin(), modes.end(), rng);
        ComplexMatrix skew(d, d);
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                skew(r, c) = r == c ? Complex(0.0) : y(modes[r], modes[c]);
            }
        }
        worst = std::max(worst, std::abs(permanent(skew)));
    }
    return worst;
}

double permutation_qfi_invariance(const OccupationVector &input) {
    const int m = input.modes();
    if (m > 8) {
        fail(ErrorKind::TooLarge, "permutation sweep limited to m <= 8");
    }
    const ComplexMatrix h = generator(NetworkKind::symmetric, m);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    do {
        const double f = qfi_oracle(h, input.permuted(perm)).full;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hi - lo;
}

MeasurementCurve measurement_curve(NetworkKind kind, const OccupationVector &input, const std::vector<double> &phis) {
    const UnitaryFamily family = family_of(kind, input.modes());
    const double qfi = qfi_closed(kind, input);
    MeasurementCurve curve;
    for (double phi : phis) {
        const double p = equal_amplitude(family, input, phi);
        curve.phi.push_back(phi);
        curve.p_equal.push_back(p * p);
        double fb = std::numeric_limits<double>::quiet_NaN();
        if (1.0 - p * p >= 1e-13) {
            fb = binary_measurement_fisher(family, input, phi);
        }
        curve.fisher_binary.push_back(fb);
        curve.fisher_full.push_back(full_distribution_fisher(family, input, phi));
        curve.qfi.push_back(qfi);
    }
    return curve;
}

}  // namespace scatmet
