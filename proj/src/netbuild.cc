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

#include "scatmet/netbuild.h"

#include <cmath>
#include <numbers>

#include "scatmet/error.h"

namespace scatmet {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

void require_even(int m, const char *what) {
    if (m < 2 || m % 2 != 0) {
        fail(ErrorKind::OddModeCount, std::string(what) + " needs an even mode count >= 2, got " + std::to_string(m));
    }
}

void require_symmetric_size(int m) {
    if (!symmetric_size_supported(m)) {
        fail(ErrorKind::UnsupportedSize,
             "symmetric network needs m = 2 or m/2 a power of two, got " + std::to_string(m));
    }
}

}  // namespace

NetworkKind parse_network_kind(std::string_view text) {
    if (text == "mzi") {
        return NetworkKind::mzi;
    }
    if (text == "sep" || text == "separable") {
        return NetworkKind::separable;
    }
    if (text == "uni" || text == "uniform") {
        return NetworkKind::uniform;
    }
    if (text == "sym" || text == "symmetric") {
        return NetworkKind::symmetric;
    }
    fail(ErrorKind::DomainError, "unknown network kind '" + std::string(text) + "'");
}

std::string_view to_string(NetworkKind kind) {
    switch (kind) {
        case NetworkKind::mzi:
            return "mzi";
        case NetworkKind::separable:
            return "sep";
        case NetworkKind::uniform:
            return "uni";
        case NetworkKind::symmetric:
            return "sym";
    }
    return "?";
}

void NetworkSpec::validate() const {
    switch (kind) {
        case NetworkKind::mzi:
            if (modes != 2) {
                fail(ErrorKind::UnsupportedSize, "mzi has exactly 2 modes");
            }
            break;
        case NetworkKind::separable:
        case NetworkKind::uniform:
            require_even(modes, to_string(kind).data());
            break;
        case NetworkKind::symmetric:
            require_symmetric_size(modes);
            break;
    }
    if (!std::isfinite(phi)) {
        fail(ErrorKind::DomainError, "phase must be finite");
    }
}

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

bool symmetric_size_supported(int m) {
    return m == 2 || (m >= 4 && m % 2 == 0 && is_power_of_two(m / 2));
}

ComplexMatrix mzi_unitary(double phi) {
    const double c = std::cos(phi / 2);
    const double s = std::sin(phi / 2);
    ComplexMatrix y(2, 2);
    y << c, s, -s, c;
    return y;
}

ComplexMatrix phase_layer(int m, double phi) {
    require_even(m, "phase_layer");
    ComplexMatrix z = ComplexMatrix::Zero(m, m);
    const Complex up = std::exp(kI * (phi / 2));
    for (int j = 0; j < m; ++j) {
        z(j, j) = j < m / 2 ? up : std::conj(up);
    }
    return z;
}

ComplexMatrix qft(int m) {
    if (m < 1) {
        fail(ErrorKind::DomainError, "qft needs m >= 1");
    }
    ComplexMatrix f(m, m);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            // Reduce the exponent mod m first so large m keeps full precision.
            const long long e = (static_cast<long long>(j) * k) % m;
            f(j, k) = norm * std::exp(-2.0 * kPi * kI * (static_cast<double>(e) / m));
        }
    }
    return f;
}

ComplexMatrix separable_unitary(int m, double phi) {
    require_even(m, "separable_unitary");
    return direct_sum(mzi_unitary(phi), m / 2);
}

ComplexMatrix uniform_unitary(int m, double phi) {
    require_even(m, "uniform_unitary");
    ComplexMatrix y = ComplexMatrix::Zero(m, m);
    const double c = std::cos(phi / 2);
    const double s = std::sin(phi / 2);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            const int d = k - j;
            if (d == 0) {
                y(j, k) = c;
            } else if (d % 2 != 0) {
                const Complex denom = 1.0 - std::exp(2.0 * kPi * kI * (static_cast<double>(d) / m));
                y(j, k) = 4.0 * kI * s / (static_cast<double>(m) * denom);
            }
        }
    }
    return y;
}

ComplexMatrix uniform_unitary_product(int m, double phi) {
    const ComplexMatrix f = qft(m);
    return f * phase_layer(m, phi) * f.adjoint();
}

RealMatrix skew_hadamard(int n) {
    if (n < 2 || !is_power_of_two(n)) {
        fail(ErrorKind::UnsupportedSize, "skew_hadamard needs a power of two >= 2, got " + std::to_string(n));
    }
    RealMatrix h(2, 2);
    h << 0.0, 1.0, -1.0, 0.0;
    for (int size = 2; size < n; size *= 2) {
        const double root = std::sqrt(static_cast<double>(size - 1));
        const RealMatrix id = RealMatrix::Identity(size, size) / root;
        RealMatrix next(2 * size, 2 * size);
        next.topLeftCorner(size, size) = h;
        next.topRightCorner(size, size) = h + id;
        next.bottomLeftCorner(size, size) = h - id;
        next.bottomRightCorner(size, size) = -h;
        h = next * (root / std::sqrt(static_cast<double>(2 * size - 1)));
    }
    return h;
}

RealMatrix symmetrizer_block_a(int m) {
    if (m < 4) {
        fail(ErrorKind::UnsupportedSize, "symmetrizer blocks need m >= 4");
    }
    const double md = m;
    RealMatrix a(2, 2);
    a << 0.0, 1.0 / std::sqrt(2.0),
        (std::sqrt(md) - std::sqrt((md - 1) * (md - 2))) / std::sqrt(2 * md * (md - 1)),
        -std::sqrt((md - 2) / (2 * md * (md - 1)));
    return a;
}

RealMatrix symmetrizer_block_b(int m) {
    if (m < 4) {
        fail(ErrorKind::UnsupportedSize, "symmetrizer blocks need m >= 4");
    }
    const double md = m;
    RealMatrix b(2, 2);
    b << 1.0 / std::sqrt(2 * (md - 1)), std::sqrt(md / (2 * (md - 1) * (md - 2))),
        (std::sqrt(md * (md - 2)) + 2 * std::sqrt(md - 1)) / std::sqrt(2 * md * (md - 1) * (md - 2)),
        -std::sqrt((md - 2) / (2 * md * (md - 1)));
    return b;
}

RealMatrix symmetrizer(int m) {
    if (m < 4 || !symmetric_size_supported(m)) {
        fail(ErrorKind::UnsupportedSize, "symmetrizer needs m >= 4 with m/2 a power of two, got " + std::to_string(m));
    }
    const int blocks = m / 2;
    const RealMatrix h = skew_hadamard(blocks);
    const RealMatrix a = symmetrizer_block_a(m);
    const RealMatrix b = symmetrizer_block_b(m);
    RealMatrix t(m, m);
    for (int row = 0; row < blocks; ++row) {
        for (int col = 0; col < blocks; ++col) {
            if (row == col) {
                t.block(2 * row, 2 * col, 2, 2) = a;
            } else {
                t.block(2 * row, 2 * col, 2, 2) = h(row, col) < 0 ? RealMatrix(-b) : b;
            }
        }
    }
    return t;
}

Eigen::MatrixXi symmetric_sign_pattern(int m) {
    require_symmetric_size(m);
    Eigen::MatrixXi s = Eigen::MatrixXi::Zero(m, m);
    if (m == 2) {
        s << 0, 1, -1, 0;
        return s;
    }
    const RealMatrix h = skew_hadamard(m / 2);
    Eigen::Matrix2i diag_block;
    diag_block << 0, -1, 1, 0;
    Eigen::Matrix2i off_block;
    off_block << 1, 1, 1, -1;
    for (int row = 0; row < m / 2; ++row) {
        for (int col = 0; col < m / 2; ++col) {
            if (row == col) {
                s.block<2, 2>(2 * row, 2 * col) = diag_block;
            } else {
                s.block<2, 2>(2 * row, 2 * col) = h(row, col) < 0 ? Eigen::Matrix2i(-off_block) : off_block;
            }
        }
    }
    return s;
}

ComplexMatrix symmetric_unitary(int m, double phi) {
    require_symmetric_size(m);
    if (m == 2) {
        return mzi_unitary(phi);
    }
    const double c = std::cos(phi / 2);
    const double s = std::sin(phi / 2) / std::sqrt(static_cast<double>(m - 1));
    const Eigen::MatrixXi signs = symmetric_sign_pattern(m);
    ComplexMatrix y(m, m);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            y(j, k) = j == k ? c : s * signs(j, k);
        }
    }
    return y;
}

ComplexMatrix symmetric_unitary_product(int m, double phi) {
    require_symmetric_size(m);
    if (m == 2) {
        return mzi_unitary(phi);
    }
    const ComplexMatrix t = symmetrizer(m).cast<Complex>();
    return t * separable_unitary(m, phi) * t.transpose();
}

ComplexMatrix network_unitary(const NetworkSpec &spec) {
    spec.validate();
    switch (spec.kind) {
        case NetworkKind::mzi:
            return mzi_unitary(spec.phi);
        case NetworkKind::separable:
            return separable_unitary(spec.modes, spec.phi);
        case NetworkKind::uniform:
            return uniform_unitary(spec.modes, spec.phi);
        case NetworkKind::symmetric:
            return symmetric_unitary(spec.modes, spec.phi);
    }
    fail(ErrorKind::DomainError, "unknown network kind");
}

ComplexMatrix generator(NetworkKind kind, int m) {
    NetworkSpec{kind, m, 0.0}.validate();
    ComplexMatrix h = ComplexMatrix::Zero(m, m);
    switch (kind) {
        case NetworkKind::mzi:
        case NetworkKind::separable:
            for (int p = 0; p < m / 2; ++p) {
                h(2 * p, 2 * p + 1) = -0.5 * kI;
                h(2 * p + 1, 2 * p) = 0.5 * kI;
            }
            break;
        case NetworkKind::uniform:
            for (int j = 0; j < m; ++j) {
                for (int k = 0; k < m; ++k) {
                    const int d = k - j;
                    if (d % 2 != 0) {
                        const Complex denom = 1.0 - std::exp(2.0 * kPi * kI * (static_cast<double>(d) / m));
                        h(j, k) = 2.0 / (static_cast<double>(m) * denom);
                    }
                }
            }
            break;
        case NetworkKind::symmetric: {
            const Eigen::MatrixXi signs = symmetric_sign_pattern(m);
            const Complex scale = -kI / (2.0 * std::sqrt(static_cast<double>(m - 1)));
            for (int j = 0; j < m; ++j) {
                for (int k = 0; k < m; ++k) {
                    h(j, k) = scale * static_cast<double>(signs(j, k));
                }
            }
            break;
        }
    }
    return h;
}

ComplexMatrix sylvester_unitary(int m, double phi) {
    if (m < 2 || !is_power_of_two(m)) {
        fail(ErrorKind::UnsupportedSize, "Sylvester construction needs m a power of two");
    }
    RealMatrix w(1, 1);
    w << 1.0;
    while (w.rows() < m) {
        const Eigen::Index n = w.rows();
        RealMatrix next(2 * n, 2 * n);
        next << w, w, w, -w;
        w = next / std::sqrt(2.0);
    }
    const ComplexMatrix wc = w.cast<Complex>();
    return wc * phase_layer(m, phi) * wc.transpose();
}

ComplexMatrix sylvester_mode_map(int m) {
    if (m < 2 || !is_power_of_two(m)) {
        fail(ErrorKind::UnsupportedSize, "Sylvester construction needs m a power of two");
    }
    ComplexMatrix q = ComplexMatrix::Zero(m, m);
    for (int p = 0; p < m / 2; ++p) {
        q(p, 2 * p) = 1.0;
        q(p + m / 2, 2 * p + 1) = -kI;
    }
    return q;
}

RealMatrix similarity_permutation(SimilarityVariant variant) {
    RealMatrix p(4, 4);
    switch (variant) {
        case SimilarityVariant::M4:
            p << 0, 1, 0, 0,  //
                0, 0, -1, 0,  //
                1, 0, 0, 0,   //
                0, 0, 0, -1;
            break;
        case SimilarityVariant::M41:
            p << 0, 1, 0, 0,  //
                1, 0, 0, 0,   //
                0, 0, -1, 0,  //
                0, 0, 0, 1;
            break;
        case SimilarityVariant::M42:
            p << 0, 1, 0, 0,  //
                0, 0, 1, 0,   //
                0, 0, 0, 1,   //
                -1, 0, 0, 0;
            break;
    }
    return p;
}

double permutation_similarity_check(SimilarityVariant variant, double phi) {
    const ComplexMatrix p = similarity_permutation(variant).cast<Complex>();
    // Signed permutations are orthogonal, so the inverse is the transpose.
    const ComplexMatrix conjugated = p.transpose() * symmetric_unitary(4, phi) * p;
    const double target_phi = variant == SimilarityVariant::M4 ? phi : -phi;
    return max_abs_diff(conjugated, symmetric_unitary(4, target_phi));
}

}  // namespace scatmet
