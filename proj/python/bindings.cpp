// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "wavecp/changepoint.hpp"
#include "wavecp/csv.hpp"
#include "wavecp/cwt.hpp"
#include "wavecp/dwt.hpp"
#include "wavecp/errors.hpp"
#include "wavecp/filters.hpp"
#include "wavecp/preprocess.hpp"
#include "wavecp/report.hpp"
#include "wavecp/spectral.hpp"
#include "wavecp/synthetic.hpp"
#include "wavecp/version.hpp"

namespace py = pybind11;
using namespace wavecp;

namespace {

TimeSeries make_series(std::vector<double> values, const std::optional<std::string>& start) {
    TimeSeries x;
    x.values = std::move(values);
    if (start) {
        const auto ym = parse_year_month(*start);
        if (!ym) {
            throw InvalidParams("start must be YYYY-MM");
        }
        x.start = ym;
    }
    return x;
}

std::optional<std::string> label_str(const std::optional<YearMonth>& ym) {
    if (!ym) return std::nullopt;
    return ym->str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "wavelet transforms and variance change-point analysis";
    m.attr("__version__") = k_version;

    // base first: translators run in reverse registration order
    auto base = py::register_exception<Error>(m, "WavecpError");
    py::register_exception<UnsupportedFilter>(m, "UnsupportedFilterError", base);
    py::register_exception<LengthNotDivisible>(m, "LengthNotDivisibleError", base);
    py::register_exception<InsufficientData>(m, "InsufficientDataError", base);
    py::register_exception<ZeroEnergy>(m, "ZeroEnergyError", base);

    py::enum_<WaveletFamily>(m, "WaveletFamily")
        .value("haar", WaveletFamily::haar)
        .value("daubechies", WaveletFamily::daubechies)
        .value("least_asymmetric", WaveletFamily::least_asymmetric)
        .value("coiflet", WaveletFamily::coiflet);

    py::class_<FilterPair>(m, "FilterPair")
        .def_readonly("g", &FilterPair::g)
        .def_readonly("h", &FilterPair::h)
        .def_readonly("family", &FilterPair::family)
        .def_readonly("order", &FilterPair::order)
        .def_readonly("vanishing_moments", &FilterPair::vanishing_moments)
        .def_readonly("id", &FilterPair::id)
        .def("__len__", [](const FilterPair& f) { return f.length(); })
        .def("__repr__",
             [](const FilterPair& f) { return "<FilterPair " + f.id + ">"; });

    m.def("filter_catalog",
          py::overload_cast<WaveletFamily, int>(&filter_catalog),
          py::arg("family"), py::arg("order"));
    m.def("filter_catalog",
          py::overload_cast<std::string_view>(&filter_catalog), py::arg("id"));
    m.def("catalog_ids", &catalog_ids);
    m.def("qmf_from_scaling",
          [](const std::vector<double>& g) { return qmf_from_scaling(g); },
          py::arg("g"));
    m.def("frequency_response",
          [](const std::vector<double>& f, std::size_t n) {
              return frequency_response(f, n);
          },
          py::arg("filter"), py::arg("n_points"));

    py::class_<ValidationCheck>(m, "ValidationCheck")
        .def_readonly("name", &ValidationCheck::name)
        .def_readonly("residual", &ValidationCheck::residual)
        .def_readonly("tolerance", &ValidationCheck::tolerance)
        .def_readonly("passed", &ValidationCheck::pass);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("checks", &ValidationReport::checks)
        .def_readonly("passed", &ValidationReport::pass);

    m.def("validate_filter", &validate_filter, py::arg("filter"));

    py::class_<DwtCoefficients>(m, "DwtCoefficients")
        .def_readonly("w", &DwtCoefficients::w)
        .def_readonly("u", &DwtCoefficients::u)
        .def_readonly("n", &DwtCoefficients::n)
        .def_readonly("filter_id", &DwtCoefficients::filter_id)
        .def_readonly("aligned", &DwtCoefficients::aligned)
        .def_property_readonly("levels", &DwtCoefficients::levels)
        .def("concatenated", &DwtCoefficients::concatenated);

    m.def("dwt",
          [](const std::vector<double>& x, const FilterPair& f, int levels) {
              return dwt(x, f, levels);
          },
          py::arg("x"), py::arg("filter"), py::arg("levels"));
    m.def("idwt", &idwt, py::arg("coefficients"), py::arg("filter"));

    py::class_<MraDecomposition>(m, "MraDecomposition")
        .def_readonly("details", &MraDecomposition::details)
        .def_readonly("smooth", &MraDecomposition::smooth);

    m.def("mra",
          [](const std::vector<double>& x, const FilterPair& f, int levels) {
              return mra(x, f, levels);
          },
          py::arg("x"), py::arg("filter"), py::arg("levels"));
    m.def("align_coefficients", &align_coefficients, py::arg("coefficients"),
          py::arg("filter"));
    m.def("boundary_count", &boundary_count, py::arg("filter_length"), py::arg("level"));

    py::enum_<MotherWavelet>(m, "MotherWavelet")
        .value("haar_analytic", MotherWavelet::haar_analytic)
        .value("morlet_real", MotherWavelet::morlet_real)
        .value("mexican_hat", MotherWavelet::mexican_hat);

    py::class_<SampledWavelet>(m, "SampledWavelet")
        .def_readonly("samples", &SampledWavelet::samples)
        .def_readonly("dt", &SampledWavelet::dt)
        .def_readonly("t0", &SampledWavelet::t0)
        .def("integral", &SampledWavelet::integral)
        .def("energy", &SampledWavelet::energy);

    m.def("make_wavelet", &make_wavelet, py::arg("family"), py::arg("n_samples"),
          py::arg("omega0") = 6.0);

    py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
        .def_readonly("zero_integral_residual", &AdmissibilityReport::zero_integral_residual)
        .def_readonly("energy_residual", &AdmissibilityReport::energy_residual)
        .def_readonly("c_psi", &AdmissibilityReport::c_psi)
        .def_readonly("c_psi_finite_positive", &AdmissibilityReport::c_psi_finite_positive);

    m.def("check_admissibility", &check_admissibility, py::arg("wavelet"));

    py::class_<Scalogram>(m, "Scalogram")
        .def_readonly("coefficients", &Scalogram::coefficients)
        .def_readonly("scales", &Scalogram::scales)
        .def_readonly("n_times", &Scalogram::n_times);

    m.def("dyadic_scales", &dyadic_scales, py::arg("s_min"), py::arg("s_max"),
          py::arg("voices") = 4);
    m.def("cwt_transform",
          [](const std::vector<double>& x, const std::vector<double>& scales,
             const SampledWavelet& w) { return cwt_transform(x, scales, w); },
          py::arg("x"), py::arg("scales"), py::arg("wavelet"));

    py::class_<TrendFit>(m, "TrendFit")
        .def_readonly("beta0", &TrendFit::beta0)
        .def_readonly("beta1", &TrendFit::beta1)
        .def_readonly("stderr0", &TrendFit::stderr0)
        .def_readonly("stderr1", &TrendFit::stderr1)
        .def_readonly("p0", &TrendFit::p0)
        .def_readonly("p1", &TrendFit::p1)
        .def_readonly("residual_sd", &TrendFit::residual_sd)
        .def_readonly("residuals", &TrendFit::residuals);

    m.def("fit_linear_trend",
          [](const std::vector<double>& values, const std::optional<std::string>& start) {
              return fit_linear_trend(make_series(values, start));
          },
          py::arg("values"), py::arg("start") = std::nullopt);
    m.def("first_difference",
          [](const std::vector<double>& values, bool demean) {
              return first_difference(make_series(values, std::nullopt), demean).values;
          },
          py::arg("values"), py::arg("demean") = false);
    m.def("truncate_to_dyadic",
          [](const std::vector<double>& values, std::size_t target) {
              return truncate_to_dyadic(make_series(values, std::nullopt), target).values;
          },
          py::arg("values"), py::arg("target"));

    py::class_<NonboundaryRange>(m, "NonboundaryRange")
        .def_readonly("level", &NonboundaryRange::level)
        .def_readonly("first_index", &NonboundaryRange::first_index)
        .def_readonly("count", &NonboundaryRange::count)
        .def_readonly("total", &NonboundaryRange::total)
        .def("sufficient", &NonboundaryRange::sufficient);

    m.def("nonboundary_range", &nonboundary_range, py::arg("level"), py::arg("filter"),
          py::arg("n"));

    py::class_<CusumResult>(m, "CusumResult")
        .def_readonly("d", &CusumResult::d)
        .def_readonly("k_star", &CusumResult::k_star);

    m.def("cusum_statistic",
          [](const std::vector<double>& v) { return cusum_statistic(v); }, py::arg("v"));

    py::class_<MonteCarloConfig>(m, "MonteCarloConfig")
        .def(py::init([](std::size_t replicates, std::uint64_t seed, int threads) {
                 return MonteCarloConfig{replicates, seed, threads};
             }),
             py::arg("replicates") = 100000, py::arg("seed") = 0x77617665u,
             py::arg("threads") = 0)
        .def_readwrite("replicates", &MonteCarloConfig::replicates)
        .def_readwrite("seed", &MonteCarloConfig::seed)
        .def_readwrite("threads", &MonteCarloConfig::threads);

    m.def("critical_value", &critical_value, py::arg("m"), py::arg("alpha"), py::arg("mc"));

    py::class_<ChangePointReport>(m, "ChangePointReport")
        .def_readonly("level", &ChangePointReport::level)
        .def_readonly("d_statistic", &ChangePointReport::d_statistic)
        .def_readonly("critical_value", &ChangePointReport::critical_value)
        .def_readonly("alpha", &ChangePointReport::alpha)
        .def_readonly("reject", &ChangePointReport::reject)
        .def_readonly("k_star", &ChangePointReport::k_star)
        .def_readonly("location", &ChangePointReport::location)
        .def_property_readonly(
            "location_label",
            [](const ChangePointReport& r) { return label_str(r.location_label); })
        .def_readonly("nonboundary_count", &ChangePointReport::nonboundary_count)
        .def_readonly("nonboundary_first", &ChangePointReport::nonboundary_first);

    m.def("test_level",
          [](const DwtCoefficients& c, int level, const FilterPair& f, double alpha,
             const MonteCarloConfig& mc, const std::optional<std::string>& start) {
              std::optional<YearMonth> ym;
              if (start) ym = parse_year_month(*start);
              return test_level(c, level, f, alpha, mc, ym);
          },
          py::arg("coefficients"), py::arg("level"), py::arg("filter"), py::arg("alpha"),
          py::arg("mc"), py::arg("start") = std::nullopt);

    m.def("detect_changepoints",
          [](const std::vector<double>& values, const std::optional<std::string>& start,
             const FilterPair& f, int levels, double alpha, const MonteCarloConfig& mc) {
              return detect_changepoints(make_series(values, start), f, levels, alpha, mc);
          },
          py::arg("values"), py::arg("start"), py::arg("filter"), py::arg("levels"),
          py::arg("alpha"), py::arg("mc"));

    py::class_<Periodogram>(m, "Periodogram")
        .def_readonly("frequencies", &Periodogram::frequencies)
        .def_readonly("power", &Periodogram::power);

    m.def("periodogram",
          [](const std::vector<double>& x) { return periodogram(x); }, py::arg("x"));
    m.def("dominant_peaks", &dominant_peaks, py::arg("periodogram"), py::arg("k"));

    py::enum_<SyntheticKind>(m, "SyntheticKind")
        .value("sinusoids", SyntheticKind::sinusoids)
        .value("varshift", SyntheticKind::varshift)
        .value("discontinuity", SyntheticKind::discontinuity);

    m.def("generate_synthetic",
          [](SyntheticKind kind, std::size_t n, double sigma_before, double sigma_after,
             std::size_t change_index, double decay, long break_index, std::uint64_t seed) {
              SyntheticParams p;
              p.n = n;
              p.sigma_before = sigma_before;
              p.sigma_after = sigma_after;
              p.change_index = change_index;
              p.decay = decay;
              p.break_index = break_index;
              return generate_synthetic(kind, p, seed).values;
          },
          py::arg("kind"), py::arg("n") = 1024, py::arg("sigma_before") = 1.0,
          py::arg("sigma_after") = 3.0, py::arg("change_index") = 512,
          py::arg("decay") = 32.0, py::arg("break_index") = -1, py::arg("seed") = 0);

    m.def("read_series_csv",
          [](const std::filesystem::path& p) {
              const TimeSeries x = read_series_csv(p);
              return py::make_tuple(x.values, label_str(x.start));
          },
          py::arg("path"));

    py::class_<AnalysisReport>(m, "AnalysisReport")
        .def_readonly("input_digest", &AnalysisReport::input_digest)
        .def_readonly("input_rows", &AnalysisReport::input_rows)
        .def_readonly("trend", &AnalysisReport::trend)
        .def_readonly("analyzed_length", &AnalysisReport::analyzed_length)
        .def_readonly("levels", &AnalysisReport::levels)
        .def("to_json", [](const AnalysisReport& r) { return report_to_json(r); });

    m.def("run_analyze",
          [](const std::filesystem::path& input, const std::string& wavelet, int levels,
             double alpha, const std::string& mode, bool demean, const MonteCarloConfig& mc) {
              AnalysisConfig cfg;
              cfg.input = input;
              cfg.wavelet = wavelet;
              cfg.levels = levels;
              cfg.alpha = alpha;
              cfg.mode = mode == "detrend" ? PreprocessMode::detrend : PreprocessMode::diff;
              cfg.demean = demean;
              cfg.mc = mc;
              return run_analyze(cfg);
          },
          py::arg("input"), py::arg("wavelet") = "la8", py::arg("levels") = 4,
          py::arg("alpha") = 0.05, py::arg("mode") = "diff", py::arg("demean") = true,
          py::arg("mc") = MonteCarloConfig{});
}
