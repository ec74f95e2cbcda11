// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wavecp/csv.hpp"
#include "wavecp/dwt.hpp"
#include "wavecp/errors.hpp"
#include "wavecp/sha256.hpp"
#include "wavecp/version.hpp"

namespace wavecp {

using json = nlohmann::ordered_json;

namespace {

json trend_to_json(const TrendFit& t) {
    return json{{"beta0", t.beta0},       {"beta1", t.beta1},
                {"stderr0", t.stderr0},   {"stderr1", t.stderr1},
                {"p0", t.p0},             {"p1", t.p1},
                {"residual_sd", t.residual_sd}};
}

TrendFit trend_from_json(const json& j) {
    TrendFit t;
    t.beta0 = j.at("beta0");
    t.beta1 = j.at("beta1");
    t.stderr0 = j.at("stderr0");
    t.stderr1 = j.at("stderr1");
    t.p0 = j.at("p0");
    t.p1 = j.at("p1");
    t.residual_sd = j.at("residual_sd");
    return t;
}

json level_to_json(const ChangePointReport& r) {
    json j{{"level", r.level},
           {"d", r.d_statistic},
           {"critical_value", r.critical_value},
           {"alpha", r.alpha},
           {"reject", r.reject},
           {"k_star", r.k_star},
           {"nonboundary_first", r.nonboundary_first},
           {"nonboundary_count", r.nonboundary_count}};
    if (r.location) {
        j["location_index"] = *r.location + 1;  // reported 1-based
    } else {
        j["location_index"] = nullptr;
    }
    if (r.location_label) {
        j["location_label"] = r.location_label->str();
    } else {
        j["location_label"] = nullptr;
    }
    return j;
}

ChangePointReport level_from_json(const json& j) {
    ChangePointReport r;
    r.level = j.at("level");
    r.d_statistic = j.at("d");
    r.critical_value = j.at("critical_value");
    r.alpha = j.at("alpha");
    r.reject = j.at("reject");
    r.k_star = j.at("k_star");
    r.nonboundary_first = j.at("nonboundary_first");
    r.nonboundary_count = j.at("nonboundary_count");
    if (!j.at("location_index").is_null()) {
        r.location = j.at("location_index").get<std::size_t>() - 1;
    }
    if (!j.at("location_label").is_null()) {
        r.location_label = parse_year_month(j.at("location_label").get<std::string>());
    }
    return r;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
    json j;
    j["schema_version"] = r.schema_version;
    j["tool"] = json{{"name", "wavecp"}, {"version", r.tool_version}};
    j["input"] = json{{"path", r.input_path},
                      {"sha256", r.input_digest},
                      {"rows", r.input_rows}};
    j["config"] = json{{"wavelet", r.config_wavelet},   {"levels", r.config_levels},
                       {"alpha", r.config_alpha},       {"mode", r.config_mode},
                       {"demean", r.config_demean},     {"bonferroni", r.config_bonferroni},
                       {"replicates", r.config_replicates}, {"seed", r.config_seed}};
    j["trend"] = trend_to_json(r.trend);
    json pre{{"analyzed_length", r.analyzed_length}};
    pre["analyzed_start"] = r.analyzed_start ? json(r.analyzed_start->str()) : json(nullptr);
    j["preprocess"] = pre;
    j["levels"] = json::array();
    for (const auto& lvl : r.levels) {
        j["levels"].push_back(level_to_json(lvl));
    }
    json energy = json::array();
    for (const auto& e : r.energy) {
        energy.push_back(json{{"level", e.level}, {"fraction", e.fraction}});
    }
    j["energy"] = energy;
    return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    AnalysisReport r;
    r.schema_version = j.at("schema_version");
    r.tool_version = j.at("tool").at("version");
    r.input_path = j.at("input").at("path");
    r.input_digest = j.at("input").at("sha256");
    r.input_rows = j.at("input").at("rows");
    r.config_wavelet = j.at("config").at("wavelet");
    r.config_levels = j.at("config").at("levels");
    r.config_alpha = j.at("config").at("alpha");
    r.config_mode = j.at("config").at("mode");
    r.config_demean = j.at("config").at("demean");
    r.config_bonferroni = j.at("config").at("bonferroni");
    r.config_replicates = j.at("config").at("replicates");
    r.config_seed = j.at("config").at("seed");
    r.trend = trend_from_json(j.at("trend"));
    r.analyzed_length = j.at("preprocess").at("analyzed_length");
    if (!j.at("preprocess").at("analyzed_start").is_null()) {
        r.analyzed_start =
            parse_year_month(j.at("preprocess").at("analyzed_start").get<std::string>());
    }
    for (const auto& lvl : j.at("levels")) {
        r.levels.push_back(level_from_json(lvl));
    }
    for (const auto& e : j.at("energy")) {
        r.energy.push_back({e.at("level"), e.at("fraction")});
    }
    return r;
}

AnalysisReport run_analyze(const AnalysisConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 0.5)) {
        throw InvalidParams("analyze: alpha must lie in (0, 0.5)");
    }
    if (cfg.levels < 1) {
        throw InvalidParams("analyze: levels must be >= 1");
    }
    if (cfg.mc.replicates < 10000) {
        throw InvalidParams("analyze: need at least 10000 replicates");
    }

    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) {
        throw InputNotFound("cannot open '" + cfg.input.string() + "'");
    }
    std::ostringstream raw;
    raw << in.rdbuf();

    const TimeSeries series = read_series_csv(cfg.input);
    const FilterPair filter = filter_catalog(cfg.wavelet);

    AnalysisReport rep;
    rep.tool_version = k_version;
    rep.input_path = cfg.input.string();
    rep.input_digest = sha256_hex(raw.str());
    rep.input_rows = series.size();
    rep.config_wavelet = cfg.wavelet;
    rep.config_levels = cfg.levels;
    rep.config_alpha = cfg.alpha;
    rep.config_mode = cfg.mode == PreprocessMode::diff ? "diff" : "detrend";
    rep.config_demean = cfg.demean;
    rep.config_bonferroni = cfg.bonferroni;
    rep.config_replicates = cfg.mc.replicates;
    rep.config_seed = cfg.mc.seed;

    rep.trend = fit_linear_trend(series);

    TimeSeries analyzed;
    if (cfg.mode == PreprocessMode::diff) {
        analyzed = first_difference(series, cfg.demean);
    } else {
        analyzed.values = rep.trend.residuals;
        analyzed.start = series.start;
        if (cfg.demean) {
            double mean = 0.0;
            for (double v : analyzed.values) mean += v;
            mean /= static_cast<double>(analyzed.size());
            for (double& v : analyzed.values) v -= mean;
        }
    }

    // largest power of two that fits
    std::size_t target = 1;
    while (target * 2 <= analyzed.size()) target *= 2;
    analyzed = truncate_to_dyadic(analyzed, target);

    const std::size_t block = std::size_t{1} << cfg.levels;
    if (analyzed.size() < block || analyzed.size() % block != 0) {
        throw InsufficientData("analyze: " + std::to_string(analyzed.size()) +
                               " samples cannot support " + std::to_string(cfg.levels) +
                               " levels");
    }

    rep.analyzed_length = analyzed.size();
    rep.analyzed_start = analyzed.start;

    double level_alpha = cfg.alpha;
    if (cfg.bonferroni) {
        int testable = 0;
        for (int j = 1; j <= cfg.levels; ++j) {
            const std::size_t total = analyzed.size() >> j;
            const std::size_t boundary = boundary_count(filter.length(), j);
            if (boundary < total && total - boundary >= 8) {
                ++testable;
            }
        }
        if (testable > 0) {
            level_alpha = cfg.alpha / testable;
        }
    }
    rep.levels = detect_changepoints(analyzed, filter, cfg.levels, level_alpha, cfg.mc);

    const DwtCoefficients c = dwt(analyzed.values, filter, cfg.levels);
    long double total = 0.0L;
    for (double v : analyzed.values) total += static_cast<long double>(v) * v;
    for (int j = 1; j <= cfg.levels; ++j) {
        long double e = 0.0L;
        for (double v : c.w[static_cast<std::size_t>(j) - 1]) {
            e += static_cast<long double>(v) * v;
        }
        rep.energy.push_back({j, total > 0.0L ? static_cast<double>(e / total) : 0.0});
    }
    long double es = 0.0L;
    for (double v : c.u) es += static_cast<long double>(v) * v;
    rep.energy.push_back({0, total > 0.0L ? static_cast<double>(es / total) : 0.0});

    if (cfg.output) {
        std::ofstream out(*cfg.output);
        if (!out) {
            throw InputNotFound("cannot write '" + cfg.output->string() + "'");
        }
        out << report_to_json(rep);
    }
    return rep;
}

}  // namespace wavecp
