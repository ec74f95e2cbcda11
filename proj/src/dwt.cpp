// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/dwt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wavecp/errors.hpp"

namespace wavecp {

namespace {

// circular right rotation by r: out[(i + r) % n] = in[i]
std::vector<double> rotate_right(std::span<const double> in, std::size_t r) {
    const std::size_t n = in.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[(i + r) % n] = in[i];
    }
    return out;
}

std::vector<double> rotate_left(std::span<const double> in, std::size_t r) {
    const std::size_t n = in.size();
    return rotate_right(in, (n - r % n) % n);
}

void check_depth(std::size_t n, int levels) {
    if (levels < 1 || levels > 30) {
        throw InvalidParams("dwt: depth must lie in [1, 30]");
    }
    const std::size_t block = std::size_t{1} << levels;
    if (n == 0 || n % block != 0) {
        throw LengthNotDivisible("series length " + std::to_string(n) +
                                 " not divisible by 2^" + std::to_string(levels));
    }
}

}  // namespace

std::size_t boundary_count(std::size_t filter_length, int level) {
    const double lm2 = static_cast<double>(filter_length) - 2.0;
    return static_cast<std::size_t>(std::ceil(lm2 * (1.0 - std::ldexp(1.0, -level))));
}

std::vector<double> DwtCoefficients::concatenated() const {
    std::vector<double> out;
    out.reserve(n);
    out.insert(out.end(), u.begin(), u.end());
    for (int j = levels(); j >= 1; --j) {
        const auto& v = w[static_cast<std::size_t>(j) - 1];
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

DwtCoefficients dwt(std::span<const double> x, const FilterPair& f, int levels) {
    check_depth(x.size(), levels);
    const std::size_t L = f.length();

    DwtCoefficients c;
    c.n = x.size();
    c.filter_id = f.id;
    c.w.reserve(static_cast<std::size_t>(levels));

    std::vector<double> u(x.begin(), x.end());
    for (int j = 1; j <= levels; ++j) {
        const std::size_t np = u.size();
        const std::size_t nj = np / 2;
        std::vector<double> un(nj), wn(nj);
        for (std::size_t t = 0; t < nj; ++t) {
            double su = 0.0, sw = 0.0;
            std::size_t k = 2 * t;
            for (std::size_t m = 0; m < L; ++m) {
                const double v = u[k];
                su += f.g[m] * v;
                sw += f.h[m] * v;
                if (++k == np) k = 0;
            }
            un[t] = su;
            wn[t] = sw;
        }
        c.w.push_back(rotate_right(wn, boundary_count(L, j)));
        u = std::move(un);
    }
    c.u = rotate_right(u, boundary_count(L, levels));
    return c;
}

namespace {

void validate_coefficients(const DwtCoefficients& c, const FilterPair& f) {
    if (!c.filter_id.empty() && !f.id.empty() && c.filter_id != f.id) {
        throw FilterMismatch("coefficients were produced with filter '" + c.filter_id +
                             "', got '" + f.id + "'");
    }
    const int J = c.levels();
    if (J < 1) {
        throw InvalidParams("idwt: no levels");
    }
    std::size_t expect = c.n;
    for (int j = 1; j <= J; ++j) {
        expect /= 2;
        if (c.w[static_cast<std::size_t>(j) - 1].size() != expect) {
            throw InvalidParams("idwt: level " + std::to_string(j) + " has inconsistent length");
        }
    }
    if (c.u.size() != expect) {
        throw InvalidParams("idwt: scale coefficients have inconsistent length");
    }
}

}  // namespace

std::vector<double> idwt(const DwtCoefficients& c, const FilterPair& f) {
    validate_coefficients(c, f);
    const std::size_t L = f.length();
    const int J = c.levels();

    std::vector<double> u = rotate_left(c.u, boundary_count(L, J));
    for (int j = J; j >= 1; --j) {
        const std::vector<double> w = rotate_left(c.w[static_cast<std::size_t>(j) - 1],
                                                  boundary_count(L, j));
        const std::size_t nj = u.size();
        const std::size_t np = 2 * nj;
        std::vector<double> out(np, 0.0);
        for (std::size_t t = 0; t < nj; ++t) {
            std::size_t k = 2 * t;
            for (std::size_t m = 0; m < L; ++m) {
                out[k] += f.g[m] * u[t] + f.h[m] * w[t];
                if (++k == np) k = 0;
            }
        }
        u = std::move(out);
    }
    return u;
}

MraDecomposition mra(std::span<const double> x, const FilterPair& f, int levels) {
    const DwtCoefficients c = dwt(x, f, levels);

    MraDecomposition out;
    out.details.reserve(static_cast<std::size_t>(levels));
    for (int j = 1; j <= levels; ++j) {
        DwtCoefficients only = c;
        for (int i = 1; i <= levels; ++i) {
            if (i != j) {
                auto& v = only.w[static_cast<std::size_t>(i) - 1];
                std::fill(v.begin(), v.end(), 0.0);
            }
        }
        std::fill(only.u.begin(), only.u.end(), 0.0);
        out.details.push_back(idwt(only, f));
    }
    DwtCoefficients smooth_only = c;
    for (auto& v : smooth_only.w) {
        std::fill(v.begin(), v.end(), 0.0);
    }
    out.smooth = idwt(smooth_only, f);
    return out;
}

namespace {

std::vector<double> upsample(std::span<const double> a, std::size_t factor) {
    std::vector<double> out((a.size() - 1) * factor + 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i * factor] = a[i];
    }
    return out;
}

std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

std::vector<double> equivalent_scaling_filter(const FilterPair& f, int level) {
    std::vector<double> acc = f.g;
    for (int j = 2; j <= level; ++j) {
        acc = convolve(upsample(f.g, std::size_t{1} << (j - 1)), acc);
    }
    return acc;
}

std::vector<double> equivalent_wavelet_filter(const FilterPair& f, int level) {
    if (level == 1) return f.h;
    return convolve(upsample(f.h, std::size_t{1} << (level - 1)),
                    equivalent_scaling_filter(f, level - 1));
}

double energy_centroid(std::span<const double> filter) {
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < filter.size(); ++n) {
        const double e = filter[n] * filter[n];
        num += static_cast<double>(n) * e;
        den += e;
    }
    return den > 0.0 ? num / den : 0.0;
}

DwtCoefficients align_coefficients(const DwtCoefficients& c, const FilterPair& f) {
    if (c.aligned) {
        return c;
    }
    DwtCoefficients out = c;
    const int J = c.levels();
    for (int j = 1; j <= J; ++j) {
        const double delay = energy_centroid(equivalent_wavelet_filter(f, j)) /
                             std::ldexp(1.0, j);
        const auto shift = static_cast<std::size_t>(std::llround(std::nearbyint(delay)));
        out.w[static_cast<std::size_t>(j) - 1] =
            rotate_left(c.w[static_cast<std::size_t>(j) - 1], shift);
    }
    const double sdelay = energy_centroid(equivalent_scaling_filter(f, J)) /
                          std::ldexp(1.0, J);
    out.u = rotate_left(c.u, static_cast<std::size_t>(std::llround(std::nearbyint(sdelay))));
    out.aligned = true;
    return out;
}

}  // namespace wavecp
