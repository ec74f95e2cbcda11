// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wavecp/csv.hpp"
#include "wavecp/cwt.hpp"
#include "wavecp/dwt.hpp"
#include "wavecp/errors.hpp"
#include "wavecp/filters.hpp"
#include "wavecp/report.hpp"
#include "wavecp/spectral.hpp"
#include "wavecp/synthetic.hpp"
#include "wavecp/version.hpp"

namespace {

using namespace wavecp;

constexpr int k_exit_ok = 0;
constexpr int k_exit_usage = 2;
constexpr int k_exit_input = 3;
constexpr int k_exit_insufficient = 4;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputNotFound("cannot write '" + path + "'");
    }
    return out;
}

void emit(std::ostream& os, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

int cmd_analyze(const AnalysisConfig& cfg) {
    const AnalysisReport rep = run_analyze(cfg);

    std::printf("input:   %s (%zu rows, sha256 %.12s...)\n", rep.input_path.c_str(),
                rep.input_rows, rep.input_digest.c_str());
    std::printf("trend:   beta0 = %.1f (se %.3g, p %.3g)  beta1 = %.1f (se %.3g, p %.3g)\n",
                rep.trend.beta0, rep.trend.stderr0, rep.trend.p0, rep.trend.beta1,
                rep.trend.stderr1, rep.trend.p1);
    std::printf("series:  %zu analyzed samples (%s), wavelet %s, %d levels\n",
                rep.analyzed_length,
                rep.analyzed_start ? rep.analyzed_start->str().c_str() : "unlabeled",
                rep.config_wavelet.c_str(), rep.config_levels);
    for (const auto& lvl : rep.levels) {
        std::printf("level %d: d = %.4f, cv(%.2g) = %.4f -> %s", lvl.level, lvl.d_statistic,
                    lvl.alpha, lvl.critical_value,
                    lvl.reject ? "variance change" : "homogeneous");
        if (lvl.reject && lvl.location) {
            std::printf(" at t = %zu", *lvl.location + 1);
            if (lvl.location_label) {
                std::printf(" (%s)", lvl.location_label->str().c_str());
            }
        }
        std::printf("\n");
    }
    if (!cfg.output) {
        std::cout << report_to_json(rep);
    }
    return k_exit_ok;
}

TimeSeries load_series(const std::string& input, bool diff) {
    TimeSeries x = read_series_csv(input);
    if (diff) {
        x = first_difference(x, true);
        std::size_t target = 1;
        while (target * 2 <= x.size()) target *= 2;
        x = truncate_to_dyadic(x, target);
    }
    return x;
}

int cmd_dwt(const std::string& input, const std::string& wavelet, int levels,
            const std::string& output, bool align, bool diff) {
    const TimeSeries x = load_series(input, diff);
    const FilterPair f = filter_catalog(wavelet);
    DwtCoefficients c = dwt(x.values, f, levels);
    if (align) {
        c = align_coefficients(c, f);
    }

    std::ofstream out = open_output(output);
    out << "section,level,index,value\n";
    std::size_t pos = 0;
    auto dump = [&](const std::string& section, int level, const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i, ++pos) {
            out << section << ',' << level << ',' << i << ',';
            emit(out, v[i]);
            out << '\n';
        }
    };
    // concatenated layout: scale block first, then wavelet levels J..1
    dump("u", levels, c.u);
    for (int j = levels; j >= 1; --j) {
        dump("w", j, c.w[static_cast<std::size_t>(j) - 1]);
    }
    return k_exit_ok;
}

int cmd_mra(const std::string& input, const std::string& wavelet, int levels,
            const std::string& output, bool diff) {
    const TimeSeries x = load_series(input, diff);
    const FilterPair f = filter_catalog(wavelet);
    const MraDecomposition m = mra(x.values, f, levels);

    std::ofstream out = open_output(output);
    out << "index,input,smooth";
    for (int j = 1; j <= levels; ++j) {
        out << ",d" << j;
    }
    out << '\n';
    for (std::size_t i = 0; i < x.size(); ++i) {
        out << i << ',';
        emit(out, x.values[i]);
        out << ',';
        emit(out, m.smooth[i]);
        for (int j = 1; j <= levels; ++j) {
            out << ',';
            emit(out, m.details[static_cast<std::size_t>(j) - 1][i]);
        }
        out << '\n';
    }
    return k_exit_ok;
}

int cmd_cwt(const std::string& input, const std::string& wavelet_name, double s_min,
            double s_max, int voices, const std::string& output) {
    const TimeSeries x = read_series_csv(input);
    MotherWavelet family;
    if (wavelet_name == "haar") {
        family = MotherWavelet::haar_analytic;
    } else if (wavelet_name == "morlet") {
        family = MotherWavelet::morlet_real;
    } else if (wavelet_name == "mexican_hat") {
        family = MotherWavelet::mexican_hat;
    } else {
        throw UnsupportedFilter("unknown mother wavelet '" + wavelet_name + "'");
    }
    const SampledWavelet w = make_wavelet(family, 2048);
    const auto scales = dyadic_scales(s_min, s_max, voices);
    const Scalogram sg = cwt_transform(x.values, scales, w);

    std::ofstream out = open_output(output);
    out << "scale,t,coefficient\n";
    for (std::size_t i = 0; i < sg.scales.size(); ++i) {
        for (std::size_t t = 0; t < sg.n_times; ++t) {
            emit(out, sg.scales[i]);
            out << ',' << t << ',';
            emit(out, sg.coefficients[i][t]);
            out << '\n';
        }
    }
    return k_exit_ok;
}

int cmd_periodogram(const std::string& input, const std::string& output) {
    const TimeSeries x = read_series_csv(input);
    const Periodogram p = periodogram(x.values);
    std::ofstream out = open_output(output);
    out << "frequency,power\n";
    for (std::size_t k = 0; k < p.frequencies.size(); ++k) {
        emit(out, p.frequencies[k]);
        out << ',';
        emit(out, p.power[k]);
        out << '\n';
    }
    return k_exit_ok;
}

int cmd_synth(const std::string& kind_name, std::size_t n, double sigma1, double sigma2,
              long change, double decay, long break_index, std::uint64_t seed,
              const std::string& start_month, const std::string& output) {
    SyntheticKind kind;
    if (kind_name == "sinusoids") {
        kind = SyntheticKind::sinusoids;
    } else if (kind_name == "varshift") {
        kind = SyntheticKind::varshift;
    } else if (kind_name == "discontinuity") {
        kind = SyntheticKind::discontinuity;
    } else {
        throw InvalidParams("unknown synthetic kind '" + kind_name + "'");
    }
    SyntheticParams p;
    p.n = n;
    p.sigma_before = sigma1;
    p.sigma_after = sigma2;
    if (change >= 0) {
        p.change_index = static_cast<std::size_t>(change);
    }
    p.decay = decay;
    p.break_index = break_index;
    TimeSeries x = generate_synthetic(kind, p, seed);
    if (!start_month.empty()) {
        const auto ym = parse_year_month(start_month);
        if (!ym) {
            throw InvalidParams("malformed --start-month (want YYYY-MM)");
        }
        x.start = ym;
    }
    write_series_csv(output, x);
    return k_exit_ok;
}

int cmd_validate_filters(const std::string& only, const std::string& response_out,
                         std::size_t response_points) {
    bool all_pass = true;
    std::ofstream resp;
    if (!response_out.empty()) {
        resp = open_output(response_out);
        resp << "filter,nu,g_magnitude,h_magnitude\n";
    }
    for (const auto& id : catalog_ids()) {
        if (!only.empty() && only != id) {
            continue;
        }
        const FilterPair f = filter_catalog(id);
        const ValidationReport rep = validate_filter(f);
        std::printf("%-6s L=%-2zu N=%-2d %s\n", id.c_str(), f.length(), f.vanishing_moments,
                    rep.pass ? "pass" : "FAIL");
        for (const auto& check : rep.checks) {
            std::printf("    %-42s residual %.3e (tol %.1e) %s\n", check.name.c_str(),
                        check.residual, check.tolerance, check.pass ? "ok" : "FAIL");
        }
        all_pass = all_pass && rep.pass;
        if (resp.is_open()) {
            const auto gm = frequency_response(f.g, response_points);
            const auto hm = frequency_response(f.h, response_points);
            for (std::size_t i = 0; i < gm.size(); ++i) {
                const double nu =
                    0.5 * static_cast<double>(i) / static_cast<double>(response_points - 1);
                resp << id << ',';
                emit(resp, nu);
                resp << ',';
                emit(resp, gm[i]);
                resp << ',';
                emit(resp, hm[i]);
                resp << '\n';
            }
        }
    }
    return all_pass ? k_exit_ok : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavelet transforms and variance change-point analysis"};
    app.set_version_flag("--version", std::string("wavecp ") + k_version);
    app.require_subcommand(1);

    // analyze
    AnalysisConfig cfg;
    std::string analyze_input, analyze_output;
    auto* analyze = app.add_subcommand("analyze", "full pipeline on a monthly CSV");
    analyze->add_option("--input", analyze_input, "input CSV (date,deaths)")->required();
    analyze->add_option("--wavelet", cfg.wavelet, "catalog filter id")->capture_default_str();
    analyze->add_option("--levels", cfg.levels, "decomposition depth")->capture_default_str();
    analyze->add_option("--alpha", cfg.alpha, "significance level in (0, 0.5)")
        ->capture_default_str();
    std::string mode = "diff";
    analyze->add_option("--mode", mode, "detrending: diff | detrend")->capture_default_str();
    bool no_demean = false;
    analyze->add_flag("--no-demean", no_demean, "skip demeaning the differenced series");
    analyze->add_flag("--bonferroni", cfg.bonferroni,
                      "split alpha across the tested levels");
    analyze->add_option("--replicates", cfg.mc.replicates, "Monte Carlo replicates (>= 10000)")
        ->capture_default_str();
    analyze->add_option("--seed", cfg.mc.seed, "Monte Carlo seed")->capture_default_str();
    analyze->add_option("--threads", cfg.mc.threads, "Monte Carlo threads (0 = auto)")
        ->capture_default_str();
    analyze->add_option("--output", analyze_output, "write the JSON report here");

    // dwt
    std::string dwt_input, dwt_wavelet = "la8", dwt_output = "dwt.csv";
    int dwt_levels = 4;
    bool dwt_align = false, dwt_diff = false;
    auto* dwt_cmd = app.add_subcommand("dwt", "pyramid transform, concatenated layout");
    dwt_cmd->add_option("--input", dwt_input, "input CSV")->required();
    dwt_cmd->add_option("--wavelet", dwt_wavelet)->capture_default_str();
    dwt_cmd->add_option("--levels", dwt_levels)->capture_default_str();
    dwt_cmd->add_flag("--align", dwt_align, "advance levels by their group delay");
    dwt_cmd->add_flag("--diff", dwt_diff,
                      "difference + demean + dyadic-truncate the input first");
    dwt_cmd->add_option("--output", dwt_output)->capture_default_str();

    // mra
    std::string mra_input, mra_wavelet = "la8", mra_output = "mra.csv";
    int mra_levels = 4;
    bool mra_diff = false;
    auto* mra_cmd = app.add_subcommand("mra", "multiresolution details and smooth");
    mra_cmd->add_option("--input", mra_input, "input CSV")->required();
    mra_cmd->add_option("--wavelet", mra_wavelet)->capture_default_str();
    mra_cmd->add_option("--levels", mra_levels)->capture_default_str();
    mra_cmd->add_flag("--diff", mra_diff,
                      "difference + demean + dyadic-truncate the input first");
    mra_cmd->add_option("--output", mra_output)->capture_default_str();

    // cwt
    std::string cwt_input, cwt_wavelet = "mexican_hat", cwt_output = "cwt.csv";
    double s_min = 2.0, s_max = 64.0;
    int voices = 4;
    auto* cwt_cmd = app.add_subcommand("cwt", "scalogram by direct correlation");
    cwt_cmd->add_option("--input", cwt_input, "input CSV")->required();
    cwt_cmd->add_option("--wavelet", cwt_wavelet, "haar | morlet | mexican_hat")
        ->capture_default_str();
    cwt_cmd->add_option("--scale-min", s_min)->capture_default_str();
    cwt_cmd->add_option("--scale-max", s_max)->capture_default_str();
    cwt_cmd->add_option("--voices", voices, "scales per octave")->capture_default_str();
    cwt_cmd->add_option("--output", cwt_output)->capture_default_str();

    // periodogram
    std::string per_input, per_output = "periodogram.csv";
    auto* per_cmd = app.add_subcommand("periodogram", "one-sided power spectral density");
    per_cmd->add_option("--input", per_input, "input CSV")->required();
    per_cmd->add_option("--output", per_output)->capture_default_str();

    // synth
    std::string synth_kind = "sinusoids", synth_start, synth_output = "synth.csv";
    std::size_t synth_n = 1024;
    double sigma1 = 1.0, sigma2 = 3.0, synth_decay = 32.0;
    long synth_change = -1, synth_break = -1;
    std::uint64_t synth_seed = 0;
    auto* synth_cmd = app.add_subcommand("synth", "generate a test signal");
    synth_cmd->add_option("--kind", synth_kind, "sinusoids | varshift | discontinuity")
        ->capture_default_str();
    synth_cmd->add_option("--n", synth_n)->capture_default_str();
    synth_cmd->add_option("--sigma1", sigma1, "varshift: sd before the change")
        ->capture_default_str();
    synth_cmd->add_option("--sigma2", sigma2, "varshift: sd from the change on")
        ->capture_default_str();
    synth_cmd->add_option("--change", synth_change, "varshift: first changed index");
    synth_cmd->add_option("--decay", synth_decay, "discontinuity: decay constant")
        ->capture_default_str();
    synth_cmd->add_option("--break-index", synth_break, "discontinuity: break (<0: from seed)");
    synth_cmd->add_option("--seed", synth_seed)->capture_default_str();
    synth_cmd->add_option("--start-month", synth_start, "label the series (YYYY-MM)");
    synth_cmd->add_option("--output", synth_output)->capture_default_str();

    // validate-filters
    std::string only, response_out;
    std::size_t response_points = 1024;
    auto* val_cmd = app.add_subcommand("validate-filters", "check the filter catalog");
    val_cmd->add_option("--only", only, "restrict to one catalog id");
    val_cmd->add_option("--response", response_out,
                        "also dump |G(nu)|, |H(nu)| as CSV for plotting");
    val_cmd->add_option("--response-points", response_points, "grid size on [0, 1/2]")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? k_exit_ok : k_exit_usage;
    }

    try {
        if (analyze->parsed()) {
            cfg.input = analyze_input;
            cfg.mode = mode == "detrend" ? PreprocessMode::detrend : PreprocessMode::diff;
            if (mode != "diff" && mode != "detrend") {
                std::cerr << "error: --mode must be diff or detrend\n";
                return k_exit_usage;
            }
            cfg.demean = !no_demean;
            if (!analyze_output.empty()) {
                cfg.output = analyze_output;
            }
            return cmd_analyze(cfg);
        }
        if (dwt_cmd->parsed()) {
            return cmd_dwt(dwt_input, dwt_wavelet, dwt_levels, dwt_output, dwt_align,
                           dwt_diff);
        }
        if (mra_cmd->parsed()) {
            return cmd_mra(mra_input, mra_wavelet, mra_levels, mra_output, mra_diff);
        }
        if (cwt_cmd->parsed()) {
            return cmd_cwt(cwt_input, cwt_wavelet, s_min, s_max, voices, cwt_output);
        }
        if (per_cmd->parsed()) {
            return cmd_periodogram(per_input, per_output);
        }
        if (synth_cmd->parsed()) {
            return cmd_synth(synth_kind, synth_n, sigma1, sigma2, synth_change, synth_decay,
                             synth_break, synth_seed, synth_start, synth_output);
        }
        if (val_cmd->parsed()) {
            return cmd_validate_filters(only, response_out, response_points);
        }
    } catch (const InputNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return k_exit_input;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return k_exit_input;
    } catch (const InsufficientData& e) {
        std::cerr << "error: " << e.what() << '\n';
        return k_exit_insufficient;
    } catch (const LengthNotDivisible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return k_exit_insufficient;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return k_exit_usage;
    }
    return k_exit_usage;
}
