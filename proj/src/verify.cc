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

#include "scatmet/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "json.hpp"
#include "scatmet/combinatorics.h"
#include "scatmet/error.h"
#include "scatmet/fockspace.h"
#include "scatmet/netbuild.h"
#include "scatmet/qfi_closed.h"
#include "scatmet/scattershot.h"

namespace scatmet {

namespace {

constexpr double kPhis[] = {0.0, 0.1, 1.0, std::numbers::pi, 3.0};

void add(std::vector<Check> &out, std::string name, double value, double threshold) {
    out.push_back({std::move(name), value, threshold, value <= threshold && !std::isnan(value)});
}

OccupationVector random_input(int m, int n, std::mt19937_64 &rng) {
    std::vector<int> counts(m, 0);
    for (int i = 0; i < n; ++i) {
        counts[rng() % m] += 1;
    }
    return OccupationVector::from_dense(counts);
}

SuiteReport netbuild_suite() {
    SuiteReport r{"netbuild", {}};
    double unit = 0.0;
    for (int m = 2; m <= 64; m += 2) {
        for (double phi : kPhis) {
            unit = std::max(unit, unitarity_error(separable_unitary(m, phi)));
            unit = std::max(unit, unitarity_error(uniform_unitary(m, phi)));
            if (symmetric_size_supported(m)) {
                unit = std::max(unit, unitarity_error(symmetric_unitary(m, phi)));
            }
        }
    }
    add(r.checks, "unitarity m<=64", unit, 1e-10);

    double product = 0.0;
    double skew = 0.0;
    double transpose = 0.0;
    for (int m = 2; m <= 32; m += 2) {
        for (double phi : kPhis) {
            product = std::max(product, max_abs_diff(uniform_unitary(m, phi), uniform_unitary_product(m, phi)));
            if (!symmetric_size_supported(m)) {
                continue;
            }
            const ComplexMatrix y = symmetric_unitary(m, phi);
            product = std::max(product, max_abs_diff(y, symmetric_unitary_product(m, phi)));
            const ComplexMatrix yt = y.transpose();
            transpose = std::max(transpose, max_abs_diff(yt, symmetric_unitary(m, -phi)));
            for (int j = 0; j < m; ++j) {
                skew = std::max(skew, std::abs(y(j, j) - std::cos(phi / 2)));
                for (int k = j + 1; k < m; ++k) {
                    skew = std::max(skew, std::abs(y(j, k) + y(k, j)));
                }
            }
        }
    }
    add(r.checks, "closed form = conjugation product m<=32", product, 1e-12);
    add(r.checks, "symmetric skew structure", skew, 1e-12);
    add(r.checks, "symmetric transpose = phase reversal", transpose, 1e-12);

    double gen = 0.0;
    for (NetworkKind kind : {NetworkKind::separable, NetworkKind::uniform, NetworkKind::symmetric}) {
        for (int m = 2; m <= 16; m *= 2) {
            const ComplexMatrix h = generator(kind, m);
            gen = std::max(gen, hermiticity_error(h));
            for (double phi : {0.1, 0.7, 2.0}) {
                const ComplexMatrix y = network_unitary({kind, m, phi});
                gen = std::max(gen, max_abs_diff(expm_hermitian(h, phi), ComplexMatrix(y.adjoint())));
            }
        }
    }
    add(r.checks, "exp(-i phi h) = Y(phi)^dagger m<=16", gen, 1e-10);

    double hprops = 0.0;
    for (int n = 2; n <= 64; n *= 2) {
        const RealMatrix h = skew_hadamard(n);
        hprops = std::max(hprops, orthogonality_error(h));
        hprops = std::max(hprops, max_abs_diff(h, RealMatrix(-h.transpose())));
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const double target = j == k ? 0.0 : 1 / std::sqrt(n - 1.0);
                hprops = std::max(hprops, std::abs(std::abs(h(j, k)) - target));
            }
        }
    }
    add(r.checks, "skew-Hadamard helpers n<=64", hprops, 1e-12);

    for (int m = 4; m <= 64; m *= 2) {
        for (auto &c : symmetrizer_checks(symmetrizer(m), m)) {
            r.checks.push_back(std::move(c));
        }
    }

    double sim = 0.0;
    for (double phi : kPhis) {
        for (auto v : {SimilarityVariant::M4, SimilarityVariant::M41, SimilarityVariant::M42}) {
            sim = std::max(sim, permutation_similarity_check(v, phi));
        }
    }
    add(r.checks, "four-mode similarity identities", sim, 1e-12);

    double syl = 0.0;
    for (int m = 2; m <= 32; m *= 2) {
        const ComplexMatrix q = sylvester_mode_map(m);
        for (double phi : {0.3, 2.1}) {
            syl = std::max(syl, max_abs_diff(ComplexMatrix(q.adjoint() * sylvester_unitary(m, phi) * q),
                                             separable_unitary(m, phi)));
        }
    }
    add(r.checks, "Sylvester network = relabelled separable", syl, 1e-12);
    return r;
}

SuiteReport qfi_suite() {
    SuiteReport r{"qfi", {}};
    const char *inputs[] = {"1100", "1010", "1001", "0110", "0101", "0011"};
    const double sep[] = {4, 2, 2, 2, 2, 4};
    const double uni[] = {3, 2, 3, 3, 2, 3};
    double table = 0.0;
    for (int i = 0; i < 6; ++i) {
        const auto v = OccupationVector::parse(inputs[i]);
        table = std::max(table, std::abs(qfi_separable(v) - sep[i]));
        table = std::max(table, std::abs(qfi_uniform(v) - uni[i]));
        table = std::max(table, std::abs(qfi_symmetric(v) - 8.0 / 3));
        for (NetworkKind kind : {NetworkKind::separable, NetworkKind::uniform, NetworkKind::symmetric}) {
            table = std::max(table, std::abs(average_qfi_exact(kind, v) - 8.0 / 3));
        }
    }
    add(r.checks, "four-mode QFI table", table, 1e-12);

    std::mt19937_64 rng(17);
    double avg = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 * (1 + static_cast<int>(rng() % 4));
        const auto v = random_input(m, static_cast<int>(rng() % 5), rng);
        const double sym = qfi_symmetric(v);
        avg = std::max(avg, std::abs(average_qfi_exact(NetworkKind::separable, v) - sym));
        avg = std::max(avg, std::abs(average_qfi_exact(NetworkKind::uniform, v) - sym));
    }
    add(r.checks, "permutation averages equal symmetric QFI", avg, 1e-12);

    double identity_failures = 0;
    double prob_sum = 0.0;
    double favg = 0.0;
    for (int m = 2; m <= 40; m += 2) {
        for (int n = 0; n <= 10 && n <= m; ++n) {
            std::uint64_t acc = 0;
            double psum = 0.0;
            for (int x = 0; 2 * x <= n; ++x) {
                acc += *binomial_exact(m / 2, x) * *binomial_exact(m / 2 - x, n - 2 * x) << (n - 2 * x);
                psum += pair_probability(m, n, x);
            }
            identity_failures += acc != *binomial_exact(m, n);
            prob_sum = std::max(prob_sum, std::abs(psum - 1.0));
            favg = std::max(favg, std::abs(avg_qfi_separable_single_photons(m, n) - (n + n * (n - 1.0) / (m - 1))));
        }
    }
    add(r.checks, "pair-count identity (integer) m<=40 n<=10", identity_failures, 0);
    add(r.checks, "pair probabilities sum to 1", prob_sum, 1e-12);
    add(r.checks, "separable single-photon average", favg, 1e-12);

    double csc = 0.0;
    for (int m = 4; m <= 256; m += 2) {
        for (int j = 1; j <= m / 2; ++j) {
            csc = std::max(csc, std::abs(cosecant_sum(m, j) - m * m / 4.0) / (m * m));
        }
    }
    add(r.checks, "cosecant sum = m^2/4 (relative)", csc, 1e-6);

    double floor_violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 * (2 + static_cast<int>(rng() % 4));
        const auto v = random_input(m, static_cast<int>(rng() % 7), rng);
        floor_violations += qfi_separable(v) < v.total();
        floor_violations += qfi_uniform(v) < v.total() - 1e-12;
        floor_violations += qfi_symmetric(v) < v.total();
    }
    add(r.checks, "shot-noise floor", floor_violations, 0);
    return r;
}

SuiteReport fock_suite() {
    SuiteReport r{"fock", {}};
    std::mt19937_64 rng(23);
    double oracle = 0.0;
    double routes = 0.0;
    const NetworkKind kinds[] = {NetworkKind::separable, NetworkKind::uniform, NetworkKind::symmetric};
    for (int trial = 0; trial < 60; ++trial) {
        const NetworkKind kind = kinds[trial % 3];
        const int m = kind == NetworkKind::symmetric ? (2 << (rng() % 3)) : 2 + 2 * static_cast<int>(rng() % 4);
        const auto v = random_input(m, static_cast<int>(rng() % 5), rng);
        const auto got = qfi_oracle(generator(kind, m), v);
        oracle = std::max(oracle, std::abs(got.full - qfi_closed(kind, v)));
        routes = std::max(routes, std::abs(got.full - got.analytic));
    }
    add(r.checks, "closed forms = Fock-space QFI", oracle, 1e-9);
    add(r.checks, "oracle routes agree", routes, 1e-9);

    double odd = 0.0;
    for (int d = 1; d <= 9; d += 2) {
        odd = std::max(odd, odd_skew_permanent_check(d, 100, 1000 + d));
    }
    add(r.checks, "odd skew permanents vanish d<=9", odd, 1e-10);

    const auto two = amplitude_expansion_check(4, OccupationVector::parse("1100"));
    const auto three = amplitude_expansion_check(4, OccupationVector::parse("1110"));
    const double expansion = std::max({std::abs(two.coefficients[0] - 1), std::abs(two.coefficients[1] + 1),
                                       std::abs(three.coefficients[0] - 1), std::abs(three.coefficients[1] + 3)});
    add(r.checks, "amplitude expansion leading terms n=2,3", expansion, 1e-8);

    double perm = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        perm = std::max(perm, permutation_qfi_invariance(random_input(4, 1 + static_cast<int>(rng() % 4), rng)));
    }
    add(r.checks, "four-mode QFI permutation invariance", perm, 1e-9);

    double limit = 0.0;
    const int cases[][2] = {{4, 2}, {8, 2}, {8, 3}};
    for (const auto &mn : cases) {
        std::vector<int> counts(mn[0], 0);
        for (int i = 0; i < mn[1]; ++i) {
            counts[i] = 1;
        }
        const auto v = OccupationVector::from_dense(counts);
        const auto fam = family_of(NetworkKind::symmetric, mn[0]);
        const double f0 = limit_at_zero([&](double phi) { return binary_measurement_fisher(fam, v, phi); });
        limit = std::max(limit, std::abs(f0 - (mn[1] + mn[1] * (mn[1] - 1.0) / (mn[0] - 1))));
    }
    add(r.checks, "binary measurement limit", limit, 1e-3);

    double norm = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 4;
        const auto v = random_input(m, 1 + static_cast<int>(rng() % 3), rng);
        double total = 0.0;
        for (const auto &o : outcome_distribution(uniform_unitary(m, 0.8), v)) {
            total += o.probability;
        }
        norm = std::max(norm, std::abs(total - 1));
    }
    add(r.checks, "probability conservation", norm, 1e-9);
    return r;
}

SuiteReport scattershot_suite() {
    SuiteReport r{"scattershot", {}};
    add(r.checks, "chi(2^16, 40) = 0.0247", std::abs(chi_for_mean_photons(65536, 40) - 0.0247), 5e-5);
    add(r.checks, "chi(2^18, 30) = 0.0107", std::abs(chi_for_mean_photons(262144, 30) - 0.0107), 5e-5);
    add(r.checks, "region edge 84", std::abs(std::floor(region_bound(65536, 40)) - 84), 0);
    add(r.checks, "region edge 603", std::abs(std::ceil(region_bound(262144, 30)) - 603), 0);

    const SqueezerSource src{64, 0.125};
    SampleStats sparse;
    SampleStats dense;
    for (int i = 0; i < 20000; ++i) {
        Rng a = make_rng(5, i);
        Rng b = make_rng(5, i);
        sparse.add(sample(src, a));
        dense.add(sample_dense_reference(src, b));
    }
    const double x = src.chi * src.chi;
    const double var = src.modes * x / ((1 - x) * (1 - x));
    const double se = std::sqrt(var / 20000);
    add(r.checks, "sparse sampler mean (sigmas)", std::abs(sparse.mean_n() - src.mean_photons()) / se, 5);
    add(r.checks, "dense sampler mean (sigmas)", std::abs(dense.mean_n() - src.mean_photons()) / se, 5);
    const double var_se = var * std::sqrt(2.0 / 20000);
    add(r.checks, "sparse sampler variance (sigmas)", std::abs(sparse.var_n() - var) / var_se, 5);

    Rng a = make_rng(9, 3);
    Rng b = make_rng(9, 3);
    const SqueezerSource big{262144, 0.0107};
    double mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        mismatches += !(sample(big, a) == sample(big, b));
    }
    add(r.checks, "seed determinism", mismatches, 0);
    return r;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::vector<Check> symmetrizer_checks(const RealMatrix &t, int m) {
    std::vector<Check> out;
    const std::string tag = " m=" + std::to_string(m);
    add(out, "T T^T = I" + tag, orthogonality_error(t), 1e-12);
    const RealMatrix a = symmetrizer_block_a(m);
    const RealMatrix b = symmetrizer_block_b(m);
    const RealMatrix id = RealMatrix::Identity(2, 2);
    add(out, "A A^T + (m/2-1) B B^T = I" + tag,
        max_abs_diff(RealMatrix(a * a.transpose() + (m / 2 - 1.0) * b * b.transpose()), id), 1e-12);
    // Template: A on the diagonal, ±B elsewhere with signs from H_{m/2}.
    const RealMatrix h = skew_hadamard(m / 2);
    double layout = 0.0;
    for (int row = 0; row < m / 2; ++row) {
        for (int col = 0; col < m / 2; ++col) {
            const RealMatrix expect = row == col ? a : (h(row, col) < 0 ? RealMatrix(-b) : b);
            layout = std::max(layout, max_abs_diff(RealMatrix(t.block(2 * row, 2 * col, 2, 2)), expect));
        }
    }
    add(out, "block layout" + tag, layout, 1e-12);
    return out;
}

std::vector<SuiteReport> run_verify(std::string_view suite) {
    std::vector<SuiteReport> out;
    const bool all = suite == "all";
    if (!all && suite != "netbuild" && suite != "qfi" && suite != "fock" && suite != "scattershot") {
        fail(ErrorKind::DomainError, "unknown suite '" + std::string(suite) +
                                         "' (use netbuild, qfi, fock, scattershot or all)");
    }
    if (all || suite == "netbuild") {
        out.push_back(netbuild_suite());
    }
    if (all || suite == "qfi") {
        out.push_back(qfi_suite());
    }
    if (all || suite == "fock") {
        out.push_back(fock_suite());
    }
    if (all || suite == "scattershot") {
        out.push_back(scattershot_suite());
    }
    return out;
}

std::string verify_report_json(const std::vector<SuiteReport> &reports) {
    nlohmann::json j;
    bool ok = true;
    nlohmann::json suites = nlohmann::json::array();
    for (const auto &rep : reports) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto &c : rep.checks) {
            checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
        }
        suites.push_back({{"suite", rep.suite}, {"pass", rep.passed()}, {"checks", checks}});
        ok = ok && rep.passed();
    }
    j["pass"] = ok;
    j["suites"] = suites;
    return j.dump(2);
}

}  // namespace scatmet
