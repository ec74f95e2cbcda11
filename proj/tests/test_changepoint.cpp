// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <filesystem>
#include <fstream>

#include "wavecp/changepoint.hpp"
#include "wavecp/errors.hpp"
#include "wavecp/synthetic.hpp"

using namespace wavecp;

namespace {

// one-sided statistics computed directly (independent of the library's
// single-pass evaluation)
double d_minus(const std::vector<double>& v) {
    const std::size_t m = v.size();
    double total = 0.0;
    for (double x : v) total += x * x;
    double acc = 0.0, best = -1.0;
    for (std::size_t k = 1; k <= m - 1; ++k) {
        acc += v[k - 1] * v[k - 1];
        best = std::max(best, acc / total - (static_cast<double>(k) - 1.0) /
                                                (static_cast<double>(m) - 1.0));
    }
    return best;
}

double d_plus(const std::vector<double>& v) {
    const std::size_t m = v.size();
    double total = 0.0;
    for (double x : v) total += x * x;
    double acc = 0.0, best = -1.0;
    for (std::size_t k = 1; k <= m - 1; ++k) {
        acc += v[k - 1] * v[k - 1];
        best = std::max(best, static_cast<double>(k) / (static_cast<double>(m) - 1.0) -
                                  acc / total);
    }
    return best;
}

}  // namespace

TEST_CASE("nonboundary ranges") {
    const FilterPair haar = filter_catalog("haar");
    for (int j : {1, 2, 3}) {
        const NonboundaryRange r = nonboundary_range(j, haar, 64);
        CHECK(r.first_index == 0);
        CHECK(r.count == r.total);
    }

    const FilterPair la8 = filter_catalog("la8");
    const NonboundaryRange r1 = nonboundary_range(1, la8, 64);
    CHECK(r1.first_index == 3);
    CHECK(r1.count == 29);
    CHECK(r1.total == 32);

    CHECK_THROWS_AS(nonboundary_range(5, la8, 64), InsufficientData);
    CHECK_THROWS_AS(nonboundary_range(1, la8, 63), LengthNotDivisible);
}

TEST_CASE("cusum statistic closed forms") {
    SUBCASE("equal magnitudes") {
        const std::vector<double> v{1, -1, 1, 1, -1, 1, -1, -1};
        const CusumResult r = cusum_statistic(v);
        CHECK(r.d == doctest::Approx(0.125).epsilon(1e-14));
    }
    SUBCASE("single spike at the end") {
        const std::vector<double> v{0, 0, 0, 0, 0, 0, 0, 1};
        const CusumResult r = cusum_statistic(v);
        CHECK(r.d == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(r.k_star == 7);
    }
    SUBCASE("scale invariance") {
        std::vector<double> v{0.3, -1.2, 0.7, 2.2, -0.4, 0.9, -1.7, 0.2, 1.1, -0.6};
        const CusumResult a = cusum_statistic(v);
        for (double& x : v) x *= -73.25;
        const CusumResult b = cusum_statistic(v);
        CHECK(a.d == doctest::Approx(b.d).epsilon(1e-14));
        CHECK(a.k_star == b.k_star);
    }
    SUBCASE("zero energy") {
        const std::vector<double> v(16, 0.0);
        CHECK_THROWS_AS(cusum_statistic(v), ZeroEnergy);
    }
    SUBCASE("too short") {
        const std::vector<double> v{1, 2, 3};
        CHECK_THROWS_AS(cusum_statistic(v), InsufficientData);
    }
}

TEST_CASE("monotone rearrangements extremize the one-sided statistics") {
    // partial sums of the ascending arrangement are pointwise minimal over
    // permutations (and the descending ones maximal), so ascending maximizes
    // D+ and descending maximizes D-
    const std::vector<double> v{0.2, -1.4, 2.5, -0.3, 0.9, -2.2, 1.1, 0.5, -0.8, 1.9};
    std::vector<double> asc = v;
    std::sort(asc.begin(), asc.end(), [](double a, double b) { return a * a < b * b; });
    std::vector<double> desc(asc.rbegin(), asc.rend());

    CHECK(d_plus(asc) >= d_plus(v));
    CHECK(d_minus(desc) >= d_minus(v));

    std::vector<double> perm = v;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(d_plus(asc) >= d_plus(perm));
        CHECK(d_minus(desc) >= d_minus(perm));
    }
}

TEST_CASE("critical values: monotonicity, asymptotics, stability") {
    MonteCarloConfig mc;
    mc.replicates = 100000;
    mc.seed = 20260808;

    const double cv05 = critical_value(128, 0.05, mc);
    const double cv01 = critical_value(128, 0.01, mc);
    CHECK(cv01 >= cv05);

    // large-m limit of the rotated cumulative-sum statistic: the Brownian
    // bridge supremum quantile 1.358 scaled by sqrt(2/m)
    const double asym = 1.358 / std::sqrt(128.0 / 2.0);
    CHECK(std::fabs(cv05 - asym) / asym < 0.05);

    MonteCarloConfig mc2{20000, 555, 0};
    MonteCarloConfig mc3{40000, 777, 0};
    const double a = critical_value(32, 0.05, mc2);
    const double b = critical_value(32, 0.05, mc3);
    CHECK(std::fabs(a - b) / b < 0.02);

    // determinism
    CHECK(critical_value(128, 0.05, mc) == cv05);

    CHECK_THROWS_AS(critical_value(4, 0.05, mc), InsufficientData);
    CHECK_THROWS_AS(critical_value(128, 0.7, mc), InvalidParams);
    MonteCarloConfig weak{500, 1, 0};
    CHECK_THROWS_AS(critical_value(128, 0.05, weak), InvalidParams);
}

TEST_CASE("disk cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "wavecp_cv_cache_test";
    std::filesystem::remove_all(dir);
    setenv("WAVECP_CACHE_DIR", dir.c_str(), 1);

    MonteCarloConfig mc{10000, 424242, 0};
    const double first = critical_value(64, 0.05, mc);
    bool found = false;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ifstream in(entry.path());
        double v = 0.0;
        if (in >> v) {
            CHECK(v == first);
            found = true;
        }
    }
    CHECK(found);
    unsetenv("WAVECP_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST_CASE("variance step is detected and located") {
    const FilterPair f = filter_catalog("la8");
    MonteCarloConfig mc;
    mc.replicates = 20000;
    mc.seed = 7;

    SyntheticParams p;
    p.n = 128;
    p.sigma_before = 1.0;
    p.sigma_after = 3.0;
    p.change_index = 64;
    const TimeSeries x = generate_synthetic(SyntheticKind::varshift, p, 99);

    const DwtCoefficients c = dwt(x.values, f, 1);
    const ChangePointReport rep = test_level(c, 1, f, 0.05, mc);
    CHECK(rep.level == 1);
    CHECK(rep.reject);
    REQUIRE(rep.location.has_value());
    CHECK(std::llabs(static_cast<long long>(*rep.location) - 64) <= 6);
    CHECK(rep.d_statistic > rep.critical_value);
    CHECK(rep.nonboundary_count == 61);
}

TEST_CASE("reports are deterministic") {
    const FilterPair f = filter_catalog("la8");
    MonteCarloConfig mc{10000, 31337, 0};
    SyntheticParams p;
    p.n = 128;
    p.change_index = 64;
    const TimeSeries x = generate_synthetic(SyntheticKind::varshift, p, 4);
    const DwtCoefficients c = dwt(x.values, f, 2);

    const ChangePointReport a = test_level(c, 1, f, 0.05, mc);
    const ChangePointReport b = test_level(c, 1, f, 0.05, mc);
    CHECK(a.d_statistic == b.d_statistic);
    CHECK(a.critical_value == b.critical_value);
    CHECK(a.k_star == b.k_star);
    CHECK(a.location == b.location);
}

TEST_CASE("detection scale invariance") {
    const FilterPair f = filter_catalog("la8");
    MonteCarloConfig mc{10000, 2222, 0};
    SyntheticParams p;
    p.n = 128;
    p.change_index = 64;
    TimeSeries x = generate_synthetic(SyntheticKind::varshift, p, 12);

    const DwtCoefficients c1 = dwt(x.values, f, 1);
    const ChangePointReport a = test_level(c1, 1, f, 0.05, mc);
    for (double& v : x.values) v *= 1875.0;
    const DwtCoefficients c2 = dwt(x.values, f, 1);
    const ChangePointReport b = test_level(c2, 1, f, 0.05, mc);

    CHECK(a.d_statistic == doctest::Approx(b.d_statistic).epsilon(1e-12));
    CHECK(a.reject == b.reject);
    CHECK(a.location == b.location);
}

TEST_CASE("constant series has no coefficient energy") {
    const FilterPair f = filter_catalog("haar");
    TimeSeries x;
    x.values.assign(64, 4.0);
    MonteCarloConfig mc{10000, 5, 0};
    CHECK_THROWS_AS(detect_changepoints(x, f, 2, 0.05, mc), ZeroEnergy);
}

TEST_CASE("insufficient levels are skipped in the sweep") {
    const FilterPair f = filter_catalog("la8");
    MonteCarloConfig mc{10000, 6, 0};
    SyntheticParams p;
    p.n = 64;
    p.change_index = 32;
    const TimeSeries x = generate_synthetic(SyntheticKind::varshift, p, 3);
    const auto reports = detect_changepoints(x, f, 4, 0.05, mc);
    // levels 3 and 4 have fewer than 8 nonboundary coefficients at n=64
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].level == 1);
    CHECK(reports[1].level == 2);
}

TEST_CASE("stationary noise rarely triggers any level") {
    // three independent per-level tests at alpha = 0.05 (no multiplicity
    // correction by design): joint no-rejection rate ~ 0.95^3 = 0.857
    const FilterPair f = filter_catalog("la8");
    MonteCarloConfig mc;
    mc.replicates = 100000;
    mc.seed = 99;
    int quiet = 0;
    for (unsigned s = 0; s < 100; ++s) {
        SyntheticParams p;
        p.n = 128;
        p.sigma_before = 1.0;
        p.sigma_after = 1.0;
        p.change_index = 0;
        const TimeSeries x = generate_synthetic(SyntheticKind::varshift, p, 7000u + s);
        const auto reports = detect_changepoints(x, f, 3, 0.05, mc);
        REQUIRE(reports.size() == 3);
        bool any = false;
        for (const auto& rep : reports) any = any || rep.reject;
        if (!any) ++quiet;
    }
    CHECK(quiet >= 75);
    CHECK(quiet <= 96);
}

TEST_CASE("labels map located months") {
    const FilterPair f = filter_catalog("la8");
    MonteCarloConfig mc{10000, 8, 0};
    SyntheticParams p;
    p.n = 64;
    p.sigma_before = 1.0;
    p.sigma_after = 4.0;
    p.change_index = 32;
    TimeSeries x = generate_synthetic(SyntheticKind::varshift, p, 21);
    x.start = YearMonth{2015, 4};
    const auto reports = detect_changepoints(x, f, 2, 0.05, mc);
    for (const auto& rep : reports) {
        if (rep.reject) {
            REQUIRE(rep.location.has_value());
            REQUIRE(rep.location_label.has_value());
            CHECK(*rep.location_label == YearMonth{2015, 4}.plus(static_cast<int>(*rep.location)));
        }
    }
}
