// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "wavecp/changepoint.hpp"
#include "wavecp/dwt.hpp"
#include "wavecp/errors.hpp"
#include "wavecp/filters.hpp"

using namespace wavecp;

namespace {

std::vector<double> random_signal(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    std::vector<double> x(n);
    for (double& v : x) v = dist(rng);
    return x;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::fabs(a[i] - b[i]));
    }
    return worst;
}

double max_abs(const std::vector<double>& a) {
    double worst = 0.0;
    for (double v : a) worst = std::max(worst, std::fabs(v));
    return worst;
}

double energy(const std::vector<double>& a) {
    long double e = 0.0L;
    for (double v : a) e += static_cast<long double>(v) * v;
    return static_cast<double>(e);
}

// Independent single-level oracle: apply the analysis operator as an explicit
// N x N matrix (upper half low-pass rows, lower half high-pass rows), then
// move the wrap-affected coefficients to the front like the library does.
struct LevelOracle {
    std::vector<double> u, w;
};

LevelOracle matrix_level(const std::vector<double>& x, const FilterPair& f, int level_for_rot) {
    const std::size_t n = x.size();
    const std::size_t half = n / 2;
    const std::size_t L = f.length();
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (std::size_t t = 0; t < half; ++t) {
        for (std::size_t m = 0; m < L; ++m) {
            A[t][(2 * t + m) % n] += f.g[m];
            A[half + t][(2 * t + m) % n] += f.h[m];
        }
    }
    LevelOracle out;
    out.u.resize(half);
    out.w.resize(half);
    std::vector<double> wraw(half);
    for (std::size_t t = 0; t < half; ++t) {
        double su = 0.0, sw = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            su += A[t][k] * x[k];
            sw += A[half + t][k] * x[k];
        }
        out.u[t] = su;
        wraw[t] = sw;
    }
    const std::size_t rot = boundary_count(L, level_for_rot);
    for (std::size_t i = 0; i < half; ++i) {
        out.w[(i + rot) % half] = wraw[i];
    }
    return out;
}

}  // namespace

TEST_CASE("analysis operator is orthonormal (matrix oracle)") {
    for (const char* id : {"haar", "db4", "la8", "coif2"}) {
        CAPTURE(id);
        const FilterPair f = filter_catalog(id);
        const std::size_t n = 32;
        const std::size_t L = f.length();
        // rows of the level-1 operator
        std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
        for (std::size_t t = 0; t < n / 2; ++t) {
            for (std::size_t m = 0; m < L; ++m) {
                A[t][(2 * t + m) % n] += f.g[m];
                A[n / 2 + t][(2 * t + m) % n] += f.h[m];
            }
        }
        double worst = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t s = 0; s < n; ++s) {
                long double ip = 0.0L;
                for (std::size_t k = 0; k < n; ++k) {
                    ip += static_cast<long double>(A[r][k]) * A[s][k];
                }
                const double expect = r == s ? 1.0 : 0.0;
                worst = std::max(worst, std::fabs(static_cast<double>(ip) - expect));
            }
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("single level agrees with the matrix oracle") {
    for (const char* id : {"haar", "db4", "la8", "coif2"}) {
        CAPTURE(id);
        const FilterPair f = filter_catalog(id);
        const auto x = random_signal(64, 7);
        const DwtCoefficients c = dwt(x, f, 1);
        const LevelOracle oracle = matrix_level(x, f, 1);
        // scale coefficients carry the same rotation as the wavelet ones
        std::vector<double> u_rot(oracle.u.size());
        const std::size_t rot = boundary_count(f.length(), 1);
        for (std::size_t i = 0; i < oracle.u.size(); ++i) {
            u_rot[(i + rot) % oracle.u.size()] = oracle.u[i];
        }
        CHECK(max_abs_diff(c.w[0], oracle.w) < 1e-12);
        CHECK(max_abs_diff(c.u, u_rot) < 1e-12);
    }
}

TEST_CASE("haar transform of [1,2,3,4]") {
    const FilterPair f = filter_catalog("haar");
    const std::vector<double> x{1, 2, 3, 4};
    const DwtCoefficients c = dwt(x, f, 1);
    const double s = std::numbers::sqrt2;
    REQUIRE(c.w[0].size() == 2);
    CHECK(c.w[0][0] == doctest::Approx(-1.0 / s).epsilon(1e-14));
    CHECK(c.w[0][1] == doctest::Approx(-1.0 / s).epsilon(1e-14));
    CHECK(c.u[0] == doctest::Approx(3.0 / s).epsilon(1e-14));
    CHECK(c.u[1] == doctest::Approx(7.0 / s).epsilon(1e-14));
}

TEST_CASE("constant series concentrates in the scale coefficients") {
    for (const char* id : {"haar", "db7", "coif4"}) {
        CAPTURE(id);
        const FilterPair f = filter_catalog(id);
        const std::vector<double> x(64, 3.25);
        const DwtCoefficients c = dwt(x, f, 3);
        for (const auto& w : c.w) {
            CHECK(max_abs(w) < 1e-10);
        }
        const double expect = 3.25 * std::pow(2.0, 1.5);  // c * 2^{J/2}
        for (double v : c.u) {
            CHECK(v == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("length must divide by 2^J") {
    const FilterPair f = filter_catalog("haar");
    CHECK_THROWS_AS(dwt(random_signal(20, 1), f, 3), LengthNotDivisible);
    CHECK_THROWS_AS(dwt(random_signal(0, 1), f, 1), LengthNotDivisible);
    CHECK_NOTHROW(dwt(random_signal(24, 1), f, 3));
}

TEST_CASE("concatenated layout runs [uJ | wJ | ... | w1]") {
    const FilterPair f = filter_catalog("la8");
    std::vector<double> x(1024);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = static_cast<double>(i);
        x[i] = std::sin(3.0 * t) + std::sin(0.3 * t) + std::sin(0.03 * t);
    }
    const DwtCoefficients c = dwt(x, f, 3);
    REQUIRE(c.u.size() == 128);
    REQUIRE(c.w[2].size() == 128);
    REQUIRE(c.w[1].size() == 256);
    REQUIRE(c.w[0].size() == 512);

    const auto cat = c.concatenated();
    REQUIRE(cat.size() == 1024);
    CHECK(std::equal(c.u.begin(), c.u.end(), cat.begin()));
    CHECK(std::equal(c.w[2].begin(), c.w[2].end(), cat.begin() + 128));
    CHECK(std::equal(c.w[1].begin(), c.w[1].end(), cat.begin() + 256));
    CHECK(std::equal(c.w[0].begin(), c.w[0].end(), cat.begin() + 512));
}

TEST_CASE("perfect reconstruction and energy conservation") {
    for (const char* id : {"haar", "db2", "db10", "la8", "coif1", "coif5"}) {
        CAPTURE(id);
        const FilterPair f = filter_catalog(id);
        for (int J : {1, 3, 5}) {
            for (std::size_t n : {64u, 256u}) {
                const auto x = random_signal(n, 1000 + static_cast<unsigned>(J) +
                                                    static_cast<unsigned>(n));
                const DwtCoefficients c = dwt(x, f, J);
                double e = energy(c.u);
                for (const auto& w : c.w) e += energy(w);
                const double ex = energy(x);
                CHECK(std::fabs(e - ex) / ex < 1e-10);

                const auto xr = idwt(c, f);
                CHECK(max_abs_diff(xr, x) / max_abs(x) < 1e-10);
            }
        }
    }
}

TEST_CASE("idwt rejects a mismatched filter") {
    const auto x = random_signal(64, 3);
    const DwtCoefficients c = dwt(x, filter_catalog("db4"), 2);
    CHECK_THROWS_AS(idwt(c, filter_catalog("db5")), FilterMismatch);
}

TEST_CASE("two-sample inverse of the constant case") {
    const FilterPair f = filter_catalog("haar");
    DwtCoefficients c;
    c.n = 2;
    c.filter_id = "haar";
    c.w = {{0.0}};
    c.u = {std::numbers::sqrt2 * 5.0};
    const auto x = idwt(c, f);
    REQUIRE(x.size() == 2);
    CHECK(x[0] == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("zeroed-detail synthesis equals the mra smooth") {
    const FilterPair f = filter_catalog("la8");
    const auto x = random_signal(128, 11);
    DwtCoefficients c = dwt(x, f, 4);
    for (auto& w : c.w) std::fill(w.begin(), w.end(), 0.0);
    const auto synth = idwt(c, f);
    const MraDecomposition m = mra(x, f, 4);
    CHECK(max_abs_diff(synth, m.smooth) < 1e-10);
}

TEST_CASE("mra of a constant is all smooth") {
    const FilterPair f = filter_catalog("db4");
    const std::vector<double> x(64, -2.5);
    const MraDecomposition m = mra(x, f, 3);
    for (const auto& d : m.details) {
        CHECK(max_abs(d) < 1e-10);
    }
    CHECK(max_abs_diff(m.smooth, x) < 1e-10);
}

TEST_CASE("mra additivity and component orthogonality") {
    const FilterPair f = filter_catalog("db4");
    const auto x = random_signal(128, 21);
    const MraDecomposition m = mra(x, f, 4);

    std::vector<double> sum = m.smooth;
    for (const auto& d : m.details) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += d[i];
    }
    CHECK(max_abs_diff(sum, x) / max_abs(x) < 1e-10);

    std::vector<const std::vector<double>*> comps;
    for (const auto& d : m.details) comps.push_back(&d);
    comps.push_back(&m.smooth);
    for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
            long double ip = 0.0L;
            for (std::size_t i = 0; i < x.size(); ++i) {
                ip += static_cast<long double>((*comps[a])[i]) * (*comps[b])[i];
            }
            CHECK(std::fabs(static_cast<double>(ip)) < 1e-8);
        }
    }
}

TEST_CASE("boundary rotation puts wrap-affected coefficients first") {
    // oracle: recompute level-1 coefficients from an x with a poisoned tail;
    // only windows that wrap can see the poison
    const FilterPair f = filter_catalog("la8");
    const std::size_t n = 64;
    std::vector<double> base = random_signal(n, 17);
    std::vector<double> poisoned = base;
    poisoned[n - 1] += 1e6;

    const DwtCoefficients a = dwt(base, f, 1);
    const DwtCoefficients b = dwt(poisoned, f, 1);
    const std::size_t lp = boundary_count(f.length(), 1);
    CHECK(lp == 3);

    std::size_t affected_before_lp = 0, affected_after_lp = 0;
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (std::fabs(a.w[0][i] - b.w[0][i]) > 1.0) {
            (i < lp ? affected_before_lp : affected_after_lp) += 1;
        }
    }
    // the poisoned final sample sits in every wrapped window and in the last
    // clean windows; all wrapped coefficients live below the split point
    CHECK(affected_before_lp == lp);
    // the clean region is touched only by the (L-1)/2 trailing full windows
    CHECK(affected_after_lp <= (f.length() - 1) / 2 + 1);
}

TEST_CASE("daubechies filters annihilate low-degree polynomials") {
    for (int N : {2, 4, 10}) {
        CAPTURE(N);
        const FilterPair f = filter_catalog(WaveletFamily::daubechies, N);
        const std::size_t n = 256;
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(n);
            double acc = 0.0;
            for (int m = 0; m < N; ++m) {
                acc += (1.0 + 0.5 * m) * std::pow(t, m);
            }
            p[i] = acc;
        }
        const DwtCoefficients c = dwt(p, f, 1);
        const std::size_t lp = boundary_count(f.length(), 1);
        double interior = 0.0;
        for (std::size_t i = lp; i < c.w[0].size(); ++i) {
            interior = std::max(interior, std::fabs(c.w[0][i]));
        }
        CHECK(interior < 1e-6);
    }
}

TEST_CASE("sub-band separation of the three-sinusoid components") {
    const FilterPair f = filter_catalog("la8");
    const std::size_t n = 1024;

    auto level_fractions = [&](const std::vector<double>& x) {
        const DwtCoefficients c = dwt(x, f, 3);
        const double total = energy(x);
        std::vector<double> fr;
        for (const auto& w : c.w) fr.push_back(energy(w) / total);
        fr.push_back(energy(c.u) / total);  // [w1, w2, w3, u3]
        return fr;
    };

    std::vector<double> hi(n), lo(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i);
        hi[i] = std::sin(3.0 * t);   // ~0.4775 cycles/sample, the w1 band [1/4, 1/2]
        lo[i] = std::sin(0.3 * t);   // ~0.04775 cycles/sample, below the w3 band edge
    }
    const auto fr_hi = level_fractions(hi);
    CHECK(fr_hi[0] >= 0.8);
    const auto fr_lo = level_fractions(lo);
    CHECK(fr_lo[2] + fr_lo[3] >= 0.8);
    CHECK(fr_lo[0] < 0.05);
}

TEST_CASE("alignment is idempotent and energy preserving") {
    const FilterPair f = filter_catalog("la8");
    const auto x = random_signal(128, 5);
    const DwtCoefficients c = dwt(x, f, 3);
    const DwtCoefficients a1 = align_coefficients(c, f);
    const DwtCoefficients a2 = align_coefficients(a1, f);
    CHECK(a1.aligned);
    for (int j = 0; j < 3; ++j) {
        CHECK(a1.w[j] == a2.w[j]);
        CHECK(energy(a1.w[j]) == doctest::Approx(energy(c.w[j])).epsilon(1e-14));
        // a circular shift keeps the multiset of values
        auto s1 = c.w[j];
        auto s2 = a1.w[j];
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        CHECK(s1 == s2);
    }
    CHECK(a1.u == a2.u);
}

TEST_CASE("haar level-1 alignment shift is zero") {
    const FilterPair f = filter_catalog("haar");
    // 2-tap filter: energy centroid 0.5, over the dyadic scale it rounds to 0
    const auto x = random_signal(32, 9);
    const DwtCoefficients c = dwt(x, f, 1);
    const DwtCoefficients a = align_coefficients(c, f);
    CHECK(a.w[0] == c.w[0]);
}

TEST_CASE("equivalent filter cascade and centroid") {
    const FilterPair f = filter_catalog("la8");
    const auto h1 = equivalent_wavelet_filter(f, 1);
    CHECK(h1 == f.h);
    const auto h2 = equivalent_wavelet_filter(f, 2);
    CHECK(h2.size() == 22);  // (2^j - 1)(L - 1) + 1
    const auto g3 = equivalent_scaling_filter(f, 3);
    CHECK(g3.size() == 50);

    CHECK(energy_centroid(f.h) == doctest::Approx(4.1536).epsilon(1e-3));
}
