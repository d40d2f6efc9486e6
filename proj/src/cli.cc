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

#include "scatmet/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scatmet/combinatorics.h"
#include "scatmet/decomp.h"
#include "scatmet/error.h"
#include "scatmet/fockspace.h"
#include "scatmet/io.h"
#include "scatmet/netbuild.h"
#include "scatmet/qfi_closed.h"
#include "scatmet/scattershot.h"
#include "scatmet/verify.h"
#include "scatmet/walkers.h"

#ifndef SCATMET_VERSION
#define SCATMET_VERSION "0.0.0"
#endif

namespace scatmet {

namespace fs = std::filesystem;
using nlohmann::json;

const char *tool_version() {
    return SCATMET_VERSION;
}

namespace {

std::string pad(const std::string &s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// All occupation vectors of m modes with `photons` photons, at most one per
// mode, in lexicographically descending order (1100 before 1010).
std::vector<OccupationVector> single_photon_inputs(int m, int photons) {
    std::vector<int> counts(m, 0);
    std::fill(counts.begin(), counts.begin() + photons, 1);
    std::vector<OccupationVector> out;
    do {
        out.push_back(OccupationVector::from_dense(counts));
    } while (std::prev_permutation(counts.begin(), counts.end()));
    return out;
}

// "a:b:n" (n points, inclusive) or a comma-separated list.
std::vector<double> parse_phi_grid(const std::string &text) {
    std::vector<double> out;
    try {
        if (std::count(text.begin(), text.end(), ':') == 2) {
            const auto c1 = text.find(':');
            const auto c2 = text.find(':', c1 + 1);
            const double a = std::stod(text.substr(0, c1));
            const double b = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
            const int n = std::stoi(text.substr(c2 + 1));
            if (n < 1) {
                fail(ErrorKind::DomainError, "phi grid needs at least one point");
            }
            for (int i = 0; i < n; ++i) {
                out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
            }
            return out;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(std::stod(item));
        }
    } catch (const std::logic_error &) {
        fail(ErrorKind::DomainError, "cannot parse phi grid '" + text + "' (use start:stop:count or a,b,c)");
    }
    if (out.empty()) {
        fail(ErrorKind::DomainError, "empty phi grid");
    }
    return out;
}

struct OutputFile {
    std::string name;
    std::string sha256;
};

OutputFile emit(const fs::path &dir, const std::string &name, const std::string &content) {
    write_file((dir / name).string(), content);
    return {name, sha256_hex(content)};
}

// ----------------------------------------------------------------- table

struct TableArgs {
    int m = 4;
    int photons = 2;
    std::string input;
};

int cmd_table(const TableArgs &a, std::ostream &out) {
    if (!symmetric_size_supported(a.m)) {
        fail(ErrorKind::UnsupportedSize, "table needs m = 2 or m/2 a power of two, got " + std::to_string(a.m));
    }
    std::vector<OccupationVector> inputs;
    if (!a.input.empty()) {
        inputs.push_back(OccupationVector::parse(a.input, a.m));
    } else {
        if (a.photons < 0 || a.photons > a.m) {
            fail(ErrorKind::DomainError, "--photons must lie in [0, m]");
        }
        if (binomial(a.m, a.photons) > 1e5) {
            fail(ErrorKind::TooLarge, "more than 1e5 single-photon inputs; pass --input instead");
        }
        inputs = single_photon_inputs(a.m, a.photons);
    }
    const std::size_t w = std::max<std::size_t>(12, inputs.front().to_string().size() + 2);
    out << pad("input", w) << pad("sep", 12) << pad("uni", 12) << pad("sym", 12) << pad("avg_sep", 12)
        << "avg_uni\n";
    for (const auto &v : inputs) {
        out << pad(v.to_string(), w) << pad(format_sig(qfi_separable(v)), 12) << pad(format_sig(qfi_uniform(v)), 12)
            << pad(format_sig(qfi_symmetric(v)), 12)
            << pad(format_sig(average_qfi_exact(NetworkKind::separable, v)), 12)
            << format_sig(average_qfi_exact(NetworkKind::uniform, v)) << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------- qfi

struct QfiArgs {
    std::string kind;
    int m = 0;
    std::string occupation;
    bool oracle = false;
};

int cmd_qfi(const QfiArgs &a, std::ostream &out) {
    const NetworkKind kind = parse_network_kind(a.kind);
    NetworkSpec{kind, a.m, 0.0}.validate();
    const auto v = OccupationVector::parse(a.occupation, a.m);
    const double closed = qfi_closed(kind, v);
    out << "closed: " << format_sig(closed) << "\n";
    if (a.oracle) {
        const auto r = qfi_oracle(generator(kind, a.m), v);
        out << "oracle: " << format_sig(r.full) << "\n";
        out << "oracle_analytic: " << format_sig(r.analytic) << "\n";
        out << "difference: " << format_sig(std::abs(r.full - closed), 3) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- matrix

struct MatrixArgs {
    std::string kind;
    int m = 0;
    double phi = 0.0;
    bool json = false;
    bool generator = false;
};

int cmd_matrix(const MatrixArgs &a, std::ostream &out) {
    const NetworkKind kind = parse_network_kind(a.kind);
    const NetworkSpec spec{kind, a.m, a.phi};
    spec.validate();
    const ComplexMatrix u = a.generator ? generator(kind, a.m) : network_unitary(spec);
    out << (a.json ? matrix_to_json(u) + "\n" : matrix_to_text(u));
    return kExitOk;
}

// ---------------------------------------------------------------- sample

struct SourceArgs {
    int m = 4096;
    double navg = 0.0;
    double chi = 0.0;
    bool navg_set = false;
    bool chi_set = false;
    bool postselect = true;
};

SqueezerSource make_source(const SourceArgs &a) {
    SqueezerSource s;
    s.modes = a.m;
    s.postselect_single = a.postselect;
    s.chi = a.chi_set ? a.chi : chi_for_mean_photons(a.m, a.navg_set ? a.navg : 12.0);
    s.validate();
    require_feasible_postselection(s);
    return s;
}

std::string histogram_csv(const SampleStats &stats, const SqueezerSource &src) {
    std::ostringstream os;
    CsvWriter w(os, {"n", "count", "pmf_analytic"});
    const int top = stats.histogram.empty() ? 0 : stats.histogram.rbegin()->first;
    for (int n = 0; n <= top; ++n) {
        const auto it = stats.histogram.find(n);
        w.cell(static_cast<long long>(n));
        w.cell(static_cast<long long>(it == stats.histogram.end() ? 0 : it->second));
        w.cell(src.postselect_single ? postselected_photon_pmf(src.modes, src.chi, n)
                                     : total_photon_pmf(src.modes, src.chi, n));
        w.end_row();
    }
    return os.str();
}

struct SampleArgs {
    SourceArgs source;
    long long count = 10;
    std::uint64_t seed = 1;
    std::string hist;
};

int cmd_sample(const SampleArgs &a, std::ostream &out, std::ostream &err) {
    const SqueezerSource src = make_source(a.source);
    if (a.count < 0 || a.count > 100000000) {
        fail(ErrorKind::TooLarge, "--count must lie in [0, 1e8]");
    }
    PostselectStats ps;
    SampleStats stats;
    for (long long i = 0; i < a.count; ++i) {
        Rng rng = make_rng(a.seed, static_cast<std::uint64_t>(i));
        const OccupationVector v = draw(src, rng, &ps);
        stats.add(v);
        out << sample_to_json(v) << "\n";
    }
    if (!a.hist.empty()) {
        write_file(a.hist, histogram_csv(stats, src));
    }
    if (src.postselect_single && ps.low_acceptance()) {
        err << "warning: postselection acceptance " << format_sig(ps.acceptance(), 3) << " is below 1%\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ walk

struct WalkArgs {
    SourceArgs source;
    std::string pair = "sep";
    int walkers = 2000;
    int kmax = 0;
    std::uint64_t seed = 1;
    bool traces = false;
    int threads = 0;
    std::string out_dir = "walk_out";
};

// Canonical argument list: replaying it reproduces every output file.
std::vector<std::string> walk_argv(const WalkArgs &a) {
    std::vector<std::string> v = {"walk", "--m", std::to_string(a.source.m)};
    if (a.source.chi_set) {
        v.insert(v.end(), {"--chi", format_double(a.source.chi)});
    } else {
        v.insert(v.end(), {"--navg", format_double(a.source.navg_set ? a.source.navg : 12.0)});
    }
    v.insert(v.end(), {"--pair", a.pair, "--walkers", std::to_string(a.walkers), "--kmax", std::to_string(a.kmax),
                       "--seed", std::to_string(a.seed)});
    v.push_back(a.source.postselect ? "--postselect-single" : "--no-postselect-single");
    if (a.traces) {
        v.push_back("--traces");
    }
    return v;
}

int cmd_walk(WalkArgs a, std::ostream &out, std::ostream &err) {
    const auto start = std::chrono::steady_clock::now();
    WalkerConfig cfg;
    if (a.source.chi_set) {
        cfg = WalkerConfig::from_chi(a.source.m, a.source.chi, a.source.postselect);
    } else {
        cfg = WalkerConfig::from_mean_photons(a.source.m, a.source.navg_set ? a.source.navg : 12.0);
        cfg.postselect_single = a.source.postselect;
    }
    cfg.pair = parse_comparison(a.pair);
    const bool has_region = cfg.n_avg >= 2.0;
    if (a.kmax <= 0) {
        a.kmax = has_region ? std::max(10, 4 * static_cast<int>(std::lround(region_bound(cfg.modes, cfg.n_avg))))
                            : 100;
    }
    cfg.walkers = a.walkers;
    cfg.kmax = a.kmax;
    cfg.seed = a.seed;
    cfg.traces = a.traces;
    cfg.threads = a.threads;
    cfg.validate();

    const EnsembleSummary s = run_ensemble(cfg);
    const bool analytic = cfg.pair == Comparison::sep_vs_sym && cfg.n_avg >= 1.0 && cfg.n_avg <= cfg.modes / 2.0;

    std::ostringstream summary;
    {
        CsvWriter w(summary, {"k", "p_advantage", "q05", "q25", "q50", "q75", "q95", "analytic_p", "region_label"});
        for (int k = 1; k <= s.kmax; ++k) {
            w.cell(static_cast<long long>(k)).cell(s.p_advantage[k - 1]);
            for (double q : s.quantiles[k - 1]) {
                w.cell(q);
            }
            if (analytic) {
                w.cell(advantage_probability_analytic(cfg.modes, cfg.n_avg, k));
            } else {
                w.empty();
            }
            if (has_region) {
                w.cell(static_cast<long long>(region_label(cfg.modes, cfg.n_avg, k)));
            } else {
                w.empty();
            }
            w.end_row();
        }
    }

    const fs::path dir(a.out_dir);
    fs::create_directories(dir);
    std::vector<OutputFile> files;
    files.push_back(emit(dir, "summary.csv", summary.str()));
    files.push_back(emit(dir, "histogram.csv", histogram_csv(s.photons, cfg.source())));
    if (cfg.traces) {
        std::ostringstream tr;
        CsvWriter w(tr, {"walker_id", "k", "delta_f", "delta_f_tot"});
        for (const auto &r : s.records) {
            for (int k = 1; k <= s.kmax; ++k) {
                w.cell(static_cast<long long>(r.walker_id)).cell(static_cast<long long>(k));
                w.cell(r.delta_f[k - 1]).cell(r.delta_f_tot[k - 1]);
                w.end_row();
            }
        }
        files.push_back(emit(dir, "traces.csv", tr.str()));
    }

    const double kadv_analytic = analytic ? kadv(cfg.modes, cfg.n_avg) : std::nan("");
    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json manifest;
    manifest["schema_version"] = kSchemaVersion;
    manifest["subcommand"] = "walk";
    manifest["version"] = tool_version();
    manifest["argv"] = walk_argv(a);
    manifest["seed"] = cfg.seed;
    manifest["config"] = {
        {"modes", cfg.modes},
        {"chi", cfg.chi},
        {"n_avg", cfg.n_avg},
        {"pair", std::string(to_string(cfg.pair))},
        {"walkers", cfg.walkers},
        {"kmax", cfg.kmax},
        {"postselect_single", cfg.postselect_single},
        {"traces", cfg.traces},
    };
    json outputs = json::array();
    for (const auto &f : files) {
        outputs.push_back({{"path", f.name}, {"sha256", f.sha256}});
    }
    manifest["outputs"] = outputs;
    manifest["results"] = {
        {"empirical_kadv", std::isnan(s.empirical_kadv) ? json(nullptr) : json(s.empirical_kadv)},
        {"analytic_kadv", std::isnan(kadv_analytic) || std::isinf(kadv_analytic) ? json(nullptr) : json(kadv_analytic)},
        {"mean_increment", s.mean_increment},
        {"stderr_increment", s.stderr_increment},
        {"postselection_acceptance", s.postselection.acceptance()},
    };
    manifest["duration_s"] = duration;
    write_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");

    for (const auto &f : files) {
        out << "wrote " << (dir / f.name).string() << "\n";
    }
    out << "wrote " << (dir / "manifest.json").string() << "\n";
    out << "empirical k_adv: " << (std::isnan(s.empirical_kadv) ? "none (P stays below 0.5)" : format_sig(s.empirical_kadv, 6))
        << "\n";
    out << "analytic k_adv: " << (analytic ? format_sig(kadv_analytic, 6) : "n/a (separable comparison only)") << "\n";
    if (has_region) {
        const double edge = region_bound(cfg.modes, cfg.n_avg);
        out << "region edge: " << std::lround(edge) << " (2(m-1)/(n(n-1)) = " << format_sig(edge, 6) << ")\n";
    }
    out << "mean increment: " << format_sig(s.mean_increment, 6) << " +- " << format_sig(s.stderr_increment, 3)
        << "\n";
    if (cfg.postselect_single && s.postselection.low_acceptance()) {
        err << "warning: postselection acceptance " << format_sig(s.postselection.acceptance(), 3)
            << " is below 1%\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- measure

struct MeasureArgs {
    int m = 0;
    std::string occupation;
    std::string kind = "sym";
    std::string phi_grid = "0.05:3.0:60";
    std::string out_file;
};

int cmd_measure(const MeasureArgs &a, std::ostream &out) {
    const NetworkKind kind = parse_network_kind(a.kind);
    if (kind == NetworkKind::uniform) {
        fail(ErrorKind::DomainError,
             "the uniform network has complex transfer amplitudes, so the input = output count does not reduce "
             "to the real-amplitude binary Fisher formula; use sym, sep or mzi");
    }
    NetworkSpec{kind, a.m, 0.0}.validate();
    const auto v = OccupationVector::parse(a.occupation, a.m);
    const auto curve = measurement_curve(kind, v, parse_phi_grid(a.phi_grid));

    std::ostringstream csv;
    {
        CsvWriter w(csv, {"phi", "p_equal", "fisher_binary", "fisher_full", "qfi"});
        for (std::size_t i = 0; i < curve.phi.size(); ++i) {
            w.cell(curve.phi[i]).cell(curve.p_equal[i]).cell(curve.fisher_binary[i]).cell(curve.fisher_full[i]);
            w.cell(curve.qfi[i]);
            w.end_row();
        }
    }
    if (a.out_file.empty()) {
        out << csv.str();
    } else {
        write_file(a.out_file, csv.str());
        out << "wrote " << a.out_file << "\n";
    }
    const auto family = family_of(kind, a.m);
    const double extrapolated = limit_at_zero([&](double phi) { return binary_measurement_fisher(family, v, phi); });
    const double n = v.total();
    out << "extrapolated F(phi->0): " << format_sig(extrapolated) << "\n";
    out << "n + n(n-1)/(m-1): " << format_sig(n + n * (n - 1) / (a.m - 1)) << "\n";
    out << "closed-form QFI: " << format_sig(qfi_closed(kind, v)) << "\n";
    return kExitOk;
}

// ------------------------------------------------------------- decompose

struct DecomposeArgs {
    int m = 0;
    std::string matrix_file;
    bool listing = false;
};

int cmd_decompose(const DecomposeArgs &a, std::ostream &out) {
    RealMatrix t;
    if (!a.matrix_file.empty()) {
        const ComplexMatrix c = matrix_from_json(read_file(a.matrix_file));
        if (c.rows() != c.cols()) {
            fail(ErrorKind::NotOrthogonal, "matrix is not square");
        }
        if (c.imag().cwiseAbs().maxCoeff() > 1e-12) {
            fail(ErrorKind::NotOrthogonal, "matrix has imaginary entries; only real orthogonal targets decompose");
        }
        t = c.real();
    } else {
        if (a.m <= 0) {
            fail(ErrorKind::DomainError, "decompose needs <m> or --matrix FILE");
        }
        if (!symmetric_size_supported(a.m) || a.m < 4) {
            fail(ErrorKind::UnsupportedSize, "T_m exists for m >= 4 with m/2 a power of two");
        }
        t = symmetrizer(a.m);
    }
    const ElementList e = decompose_orthogonal(t);
    const int m = static_cast<int>(t.rows());
    json j;
    j["modes"] = m;
    j["elements"] = json::parse(elements_to_json(e, -1));
    j["rotations"] = rotation_count(e);
    j["reconstruction_error"] = max_abs_diff(reconstruct(e, m), t);
    j["eta_report"] = reflectivity_report(e);
    out << j.dump(2) << "\n";
    if (a.listing) {
        out << circuit_listing(e);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string &suite, std::ostream &out) {
    const auto reports = run_verify(suite);
    out << verify_report_json(reports) << "\n";
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport &r) { return r.passed(); });
    return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- replay

int cmd_replay(const std::string &manifest_path, std::string out_dir, std::ostream &out, std::ostream &err) {
    const json m = json::parse(read_file(manifest_path));
    if (m.value("schema_version", 0) != kSchemaVersion) {
        fail(ErrorKind::DomainError, "manifest schema_version " + m.value("schema_version", json(0)).dump() +
                                         " is not supported (expected " + std::to_string(kSchemaVersion) + ")");
    }
    if (out_dir.empty()) {
        out_dir = (fs::path(manifest_path).parent_path() / "replay").string();
    }
    auto argv = m.at("argv").get<std::vector<std::string>>();
    argv.insert(argv.end(), {"--out", out_dir});
    std::ostringstream sink;
    const int code = run_cli(argv, sink, err);
    if (code != kExitOk) {
        return code;
    }
    bool same = true;
    for (const auto &o : m.at("outputs")) {
        const std::string name = o.at("path");
        const std::string digest = sha256_hex(read_file((fs::path(out_dir) / name).string()));
        const bool match = digest == o.at("sha256").get<std::string>();
        same = same && match;
        out << name << ": " << (match ? "identical" : "DIFFERS") << " " << digest << "\n";
    }
    return same ? kExitOk : kExitCheckFailed;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TooLarge:
        case ErrorKind::AcceptanceTooLow:
            return kExitResource;
        case ErrorKind::NumericalError:
            return kExitCheckFailed;
        default:
            return kExitUsage;
    }
}

void add_source_flags(CLI::App *sub, SourceArgs &s) {
    sub->add_option("--m", s.m, "mode count");
    auto *navg = sub->add_option_function<double>(
        "--navg", [&s](double x) { s.navg = x, s.navg_set = true; }, "mean photon number (sets chi)");
    auto *chi = sub->add_option_function<double>(
        "--chi", [&s](double x) { s.chi = x, s.chi_set = true; }, "squeezing parameter");
    navg->excludes(chi);
    sub->add_flag("--postselect-single,!--no-postselect-single", s.postselect,
                  "keep only samples with at most one photon per mode (default on)");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multimode scattershot metrology toolkit", "scatmet"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    TableArgs table;
    auto *s_table = app.add_subcommand("table", "QFI of every single-photon input for the three networks");
    s_table->add_option("--m", table.m, "mode count")->capture_default_str();
    s_table->add_option("--photons", table.photons, "photon number")->capture_default_str();
    s_table->add_option("--input", table.input, "single input occupation, e.g. 1010");

    QfiArgs qfi;
    auto *s_qfi = app.add_subcommand("qfi", "closed-form QFI of an occupation vector");
    s_qfi->add_option("kind", qfi.kind, "mzi | sep | uni | sym")->required();
    s_qfi->add_option("m", qfi.m, "mode count")->required();
    s_qfi->add_option("occupation", qfi.occupation, "digits per mode, or idx:count,... (1-based)")->required();
    s_qfi->add_flag("--oracle", qfi.oracle, "also evaluate the Fock-space variance");

    MatrixArgs mat;
    auto *s_matrix = app.add_subcommand("matrix", "print a network unitary or its generator");
    s_matrix->add_option("kind", mat.kind)->required();
    s_matrix->add_option("m", mat.m)->required();
    s_matrix->add_option("phi", mat.phi)->capture_default_str();
    s_matrix->add_flag("--json", mat.json, "JSON instead of a text grid");
    s_matrix->add_flag("--generator", mat.generator, "print the generator h instead of Y(phi)");

    SampleArgs smp;
    auto *s_sample = app.add_subcommand("sample", "draw scattershot samples as JSON lines");
    add_source_flags(s_sample, smp.source);
    s_sample->add_option("--count", smp.count)->capture_default_str();
    s_sample->add_option("--seed", smp.seed)->capture_default_str();
    s_sample->add_option("--hist", smp.hist, "also write the photon-number histogram CSV here");

    WalkArgs walk;
    auto *s_walk = app.add_subcommand("walk", "Monte Carlo walker ensemble");
    add_source_flags(s_walk, walk.source);
    s_walk->add_option("--pair", walk.pair, "sep | uni (compared against sym)")->capture_default_str();
    s_walk->add_option("--walkers", walk.walkers)->capture_default_str();
    s_walk->add_option("--kmax", walk.kmax, "samples per walker (default 4x the first region edge)");
    s_walk->add_option("--seed", walk.seed)->capture_default_str();
    s_walk->add_flag("--traces", walk.traces, "write per-walker traces");
    s_walk->add_option("--threads", walk.threads, "worker threads (0 = auto)");
    s_walk->add_option("--out", walk.out_dir, "output directory")->capture_default_str();

    MeasureArgs meas;
    auto *s_measure = app.add_subcommand("measure", "binary input = output measurement curve");
    s_measure->add_option("m", meas.m)->required();
    s_measure->add_option("occupation", meas.occupation)->required();
    s_measure->add_option("--kind", meas.kind, "sym | sep | mzi")->capture_default_str();
    s_measure->add_option("--phi-grid", meas.phi_grid, "start:stop:count or a,b,c")->capture_default_str();
    s_measure->add_option("--out", meas.out_file, "CSV path (default stdout)");

    DecomposeArgs dec;
    auto *s_dec = app.add_subcommand("decompose", "beam-splitter decomposition of T_m or a real orthogonal matrix");
    s_dec->add_option("m", dec.m, "decompose T_m");
    s_dec->add_option("--matrix", dec.matrix_file, "JSON matrix file");
    s_dec->add_flag("--listing", dec.listing, "also print the element sequence");

    std::string suite;
    auto *s_verify = app.add_subcommand("verify", "run invariant suites");
    s_verify->add_option("suite", suite, "netbuild | qfi | fock | scattershot | all")->required();

    std::string manifest;
    std::string replay_out;
    auto *s_replay = app.add_subcommand("replay", "re-run a walk manifest and compare output digests");
    s_replay->add_option("manifest", manifest)->required();
    s_replay->add_option("--out", replay_out, "output directory (default <manifest dir>/replay)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (s_table->parsed()) {
            return cmd_table(table, out);
        }
        if (s_qfi->parsed()) {
            return cmd_qfi(qfi, out);
        }
        if (s_matrix->parsed()) {
            return cmd_matrix(mat, out);
        }
        if (s_sample->parsed()) {
            return cmd_sample(smp, out, err);
        }
        if (s_walk->parsed()) {
            return cmd_walk(walk, out, err);
        }
        if (s_measure->parsed()) {
            return cmd_measure(meas, out);
        }
        if (s_dec->parsed()) {
            return cmd_decompose(dec, out);
        }
        if (s_verify->parsed()) {
            return cmd_verify(suite, out);
        }
        if (s_replay->parsed()) {
            return cmd_replay(manifest, replay_out, out, err);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace scatmet
