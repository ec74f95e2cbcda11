// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/changepoint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "wavecp/errors.hpp"

namespace wavecp {

NonboundaryRange nonboundary_range(int level, const FilterPair& f, std::size_t n) {
    if (level < 1 || level > 30) {
        throw InvalidParams("nonboundary_range: level must lie in [1, 30]");
    }
    const std::size_t block = std::size_t{1} << level;
    if (n == 0 || n % block != 0) {
        throw LengthNotDivisible("nonboundary_range: length " + std::to_string(n) +
                                 " not divisible by 2^" + std::to_string(level));
    }
    NonboundaryRange r;
    r.level = level;
    r.total = n / block;
    r.first_index = boundary_count(f.length(), level);
    r.count = r.first_index < r.total ? r.total - r.first_index : 0;
    if (!r.sufficient()) {
        throw InsufficientData("level " + std::to_string(level) + ": only " +
                               std::to_string(r.count) + " nonboundary coefficients");
    }
    return r;
}

CusumResult cusum_statistic(std::span<const double> v) {
    const std::size_t m = v.size();
    if (m < 8) {
        throw InsufficientData("cusum_statistic: need at least 8 values");
    }
    long double total = 0.0L;
    for (double x : v) total += static_cast<long double>(x) * x;
    if (!(total > 0.0L)) {
        throw ZeroEnergy("cusum_statistic: zero energy");
    }

    const double md = static_cast<double>(m);
    long double acc = 0.0L;
    double d_plus = -1.0, d_minus = -1.0, best_dev = -1.0;
    std::size_t k_star = 1;
    for (std::size_t k = 1; k <= m - 1; ++k) {
        acc += static_cast<long double>(v[k - 1]) * v[k - 1];
        const double p = static_cast<double>(acc / total);
        const double kd = static_cast<double>(k);
        d_plus = std::max(d_plus, kd / (md - 1.0) - p);
        d_minus = std::max(d_minus, p - (kd - 1.0) / (md - 1.0));
        const double dev = std::fabs(p - kd / md);
        if (dev > best_dev) {
            best_dev = dev;
            k_star = k;
        }
    }
    return {std::max(d_plus, d_minus), k_star};
}

namespace detail {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

GaussianStream::GaussianStream(std::uint64_t seed) : state_(seed) {
    // warm the state so small seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
}

double GaussianStream::uniform() {
    return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Marsaglia polar method
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    have_spare_ = true;
    return u * factor;
}

std::optional<std::size_t> variance_split_point(std::span<const double> series,
                                                std::size_t k_lo, std::size_t k_hi) {
    const std::size_t m = series.size();
    if (m < 2) return std::nullopt;
    std::vector<long double> cum(m + 1, 0.0L);
    for (std::size_t i = 0; i < m; ++i) {
        cum[i + 1] = cum[i] + static_cast<long double>(series[i]) * series[i];
    }
    const long double total = cum[m];
    if (!(total > 0.0L)) return std::nullopt;

    k_lo = std::max<std::size_t>(k_lo, 1);
    k_hi = std::min<std::size_t>(k_hi, m - 1);
    std::optional<std::size_t> best;
    long double best_ll = 0.0L;
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        const long double s1 = cum[k];
        const long double s2 = total - s1;
        if (!(s1 > 0.0L) || !(s2 > 0.0L)) continue;
        const auto kd = static_cast<long double>(k);
        const auto rd = static_cast<long double>(m - k);
        const long double ll = -(kd * std::log(s1 / kd) + rd * std::log(s2 / rd));
        if (!best || ll > best_ll) {
            best = k;
            best_ll = ll;
        }
    }
    return best;
}

}  // namespace detail

namespace {

double simulate_quantile(std::size_t m, double alpha, const MonteCarloConfig& mc) {
    const std::size_t reps = mc.replicates;
    std::vector<double> d(reps);

    unsigned want = mc.threads > 0 ? static_cast<unsigned>(mc.threads)
                                   : std::thread::hardware_concurrency();
    want = std::clamp(want, 1u, 16u);

    auto worker = [&](std::size_t lo, std::size_t hi) {
        std::vector<double> v(m);
        for (std::size_t i = lo; i < hi; ++i) {
            // per-replicate stream keyed by (seed, i): order-independent
            detail::GaussianStream gs(mc.seed ^ (0x517cc1b727220a95ull * (i + 1)));
            for (std::size_t k = 0; k < m; ++k) v[k] = gs.next();
            d[i] = cusum_statistic(v).d;
        }
    };

    if (want == 1 || reps < 4096) {
        worker(0, reps);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (reps + want - 1) / want;
        for (unsigned t = 0; t < want; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(reps, lo + chunk);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::sort(d.begin(), d.end());
    const auto rank = static_cast<std::size_t>(
        std::ceil((1.0 - alpha) * static_cast<double>(reps)));
    return d[std::min(rank, reps) - 1];
}

struct CacheKey {
    std::size_t m;
    double alpha;
    std::size_t reps;
    std::uint64_t seed;
    auto operator<=>(const CacheKey&) const = default;
};

std::optional<std::filesystem::path> disk_cache_path(const CacheKey& key) {
    const char* dir = std::getenv("WAVECP_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    char name[128];
    std::snprintf(name, sizeof(name), "cv_m%zu_a%.6g_r%zu_s%llu.txt", key.m, key.alpha,
                  key.reps, static_cast<unsigned long long>(key.seed));
    return std::filesystem::path(dir) / name;
}

}  // namespace

double critical_value(std::size_t m, double alpha, const MonteCarloConfig& mc) {
    if (m < 8) {
        throw InsufficientData("critical_value: m must be >= 8");
    }
    if (!(alpha > 0.0 && alpha < 0.5)) {
        throw InvalidParams("critical_value: alpha must lie in (0, 0.5)");
    }
    if (mc.replicates < 10000) {
        throw InvalidParams("critical_value: need at least 10000 replicates");
    }

    static std::map<CacheKey, double> cache;
    static std::mutex cache_mutex;
    const CacheKey key{m, alpha, mc.replicates, mc.seed};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }

    const auto path = disk_cache_path(key);
    if (path) {
        std::ifstream in(*path);
        double value = 0.0;
        if (in && (in >> value) && value > 0.0) {
            std::lock_guard<std::mutex> lock(cache_mutex);
            cache[key] = value;
            return value;
        }
    }

    const double value = simulate_quantile(m, alpha, mc);

    if (path) {
        std::error_code ec;
        std::filesystem::create_directories(path->parent_path(), ec);
        std::ofstream out(*path);
        if (out) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g\n", value);
            out << buf;
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key] = value;
    return value;
}

ChangePointReport test_level(const DwtCoefficients& c, int level, const FilterPair& f,
                             double alpha, const MonteCarloConfig& mc,
                             const std::optional<YearMonth>& start) {
    if (level < 1 || level > c.levels()) {
        throw InvalidParams("test_level: level " + std::to_string(level) + " not present");
    }
    const NonboundaryRange range = nonboundary_range(level, f, c.n);
    const auto& w = c.w[static_cast<std::size_t>(level) - 1];
    const std::span<const double> slice(w.data() + range.first_index, range.count);

    ChangePointReport rep;
    rep.level = level;
    rep.alpha = alpha;
    rep.nonboundary_count = range.count;
    rep.nonboundary_first = range.first_index;

    const CusumResult cs = cusum_statistic(slice);
    rep.d_statistic = cs.d;
    rep.k_star = cs.k_star;
    rep.critical_value = critical_value(range.count, alpha, mc);
    rep.reject = cs.d > rep.critical_value;

    if (rep.reject) {
        // Change time at full resolution: two-segment variance contrast over
        // the squares of the reconstructed series, restricted to the window
        // the nonboundary level coefficients cover (filter energy centroid
        // c_j onward).
        const std::vector<double> series = idwt(c, f);
        const double centroid = energy_centroid(equivalent_wavelet_filter(f, level));
        const auto scale = static_cast<double>(std::size_t{1} << level);
        const auto k_lo = static_cast<std::size_t>(std::ceil(centroid));
        const double last_clean =
            scale * static_cast<double>(range.count - 1) + centroid;
        const auto k_hi = static_cast<std::size_t>(std::floor(last_clean));
        if (auto split = detail::variance_split_point(series, k_lo, k_hi)) {
            rep.location = *split;
            if (start) {
                rep.location_label = start->plus(static_cast<int>(*split));
            }
        }
    }
    return rep;
}

std::vector<ChangePointReport> detect_changepoints(const TimeSeries& x, const FilterPair& f,
                                                   int levels, double alpha,
                                                   const MonteCarloConfig& mc) {
    const DwtCoefficients c = dwt(x.values, f, levels);
    std::vector<ChangePointReport> out;
    for (int j = 1; j <= levels; ++j) {
        const std::size_t total = c.n >> j;
        const std::size_t boundary = boundary_count(f.length(), j);
        if (boundary >= total || total - boundary < 8) {
            continue;  // insufficient nonboundary coefficients at this depth
        }
        out.push_back(test_level(c, j, f, alpha, mc, x.start));
    }
    return out;
}

}  // namespace wavecp
