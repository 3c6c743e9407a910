#pragma once

#include "okb/polynomial.hpp"
#include "okb/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <span>
#include <vector>

namespace okb::oracles {

// Independent floating-point witnesses for the exact engine. Nothing here
// calls into the triangulation or integration code.

struct McConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    unsigned shards = 1;
};

struct McResult {
    double estimate;
    double std_error;
};

using Integrand = std::function<double(std::span<const double>)>;

/// max{c + coeffs·x, 0}
inline Integrand clamped_affine(std::vector<double> coeffs, double c) {
    return [coeffs = std::move(coeffs), c](std::span<const double> x) {
        double v = c;
        for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * x[i];
        return std::max(v, 0.0);
    };
}

inline Integrand polynomial_integrand(Polynomial p) {
    return [p = std::move(p)](std::span<const double> x) { return p.evaluate(x); };
}

inline Integrand product(Integrand f, Integrand g) {
    return [f = std::move(f), g = std::move(g)](std::span<const double> x) { return f(x) * g(x); };
}

namespace detail {

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;
};

inline std::uint64_t shard_seed(std::uint64_t seed, unsigned shard) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), shard};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

template <class Sample>
McResult run_sharded(const McConfig& cfg, double measure, Sample sample) {
    if (cfg.samples < 1) throw Error(ErrorKind::InvalidArgument, "Monte Carlo needs at least one sample");
    const unsigned shards = std::max(1u, cfg.shards);
    std::vector<std::future<Moments>> parts;
    for (unsigned s = 0; s < shards; ++s) {
        const std::uint64_t n = cfg.samples / shards + (s < cfg.samples % shards ? 1 : 0);
        parts.push_back(std::async(std::launch::async, [&, s, n] {
            std::mt19937_64 rng(shard_seed(cfg.seed, s));
            Moments m;
            for (std::uint64_t i = 0; i < n; ++i) {
                const double v = sample(rng);
                m.sum += v;
                m.sum_sq += v * v;
            }
            m.n = n;
            return m;
        }));
    }
    Moments total;
    for (auto& p : parts) {
        Moments m = p.get();
        total.sum += m.sum;
        total.sum_sq += m.sum_sq;
        total.n += m.n;
    }
    const double mean = total.sum / static_cast<double>(total.n);
    const double var = std::max(0.0, total.sum_sq / static_cast<double>(total.n) - mean * mean);
    return {measure * mean, measure * std::sqrt(var / static_cast<double>(total.n))};
}

} // namespace detail

/// Uniform point of conv(0, e_1, …, e_dim) from the spacings of sorted uniforms.
template <class Rng>
void sample_simplex(Rng& rng, std::vector<double>& u, std::vector<double>& x) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (auto& v : u) v = unif(rng);
    std::sort(u.begin(), u.end());
    double prev = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        x[i] = u[i] - prev;
        prev = u[i];
    }
}

/// Estimate of ∫ f over the full-dimensional standard simplex of dimension dim.
inline McResult mc_integrate_simplex(std::size_t dim, const Integrand& f, const McConfig& cfg) {
    if (dim < 1) throw Error(ErrorKind::InvalidArgument, "simplex dimension must be >= 1");
    double measure = 1.0;
    for (std::size_t k = 2; k <= dim; ++k) measure /= static_cast<double>(k);
    return detail::run_sharded(cfg, measure, [dim, &f](std::mt19937_64& rng) {
        std::vector<double> u(dim), x(dim);
        sample_simplex(rng, u, x);
        return f(x);
    });
}

/// Hit-or-miss volume of h ∩ [lo, hi] with constraints evaluated in doubles.
inline McResult mc_volume_box(const HRep& h, const std::vector<double>& lo, const std::vector<double>& hi,
                              const McConfig& cfg) {
    const std::size_t n = h.dim();
    std::vector<std::vector<double>> normals;
    std::vector<double> offsets;
    for (const auto& s : h.halfspaces()) {
        std::vector<double> a;
        for (const auto& c : s.normal) a.push_back(c.get_d());
        normals.push_back(std::move(a));
        offsets.push_back(s.offset.get_d());
    }
    double measure = 1.0;
    for (std::size_t i = 0; i < n; ++i) measure *= hi[i] - lo[i];
    return detail::run_sharded(cfg, measure, [&](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * unif(rng);
        for (std::size_t j = 0; j < normals.size(); ++j) {
            double v = 0.0;
            for (std::size_t i = 0; i < n; ++i) v += normals[j][i] * x[i];
            if (v > offsets[j]) return 0.0;
        }
        return 1.0;
    });
}

/// Exact area of a convex polygon from its vertex set (any order).
inline Rat brute_volume_2d(const VRep& v) {
    if (v.vertices.size() < 3) return 0;
    std::vector<RatVec> p = v.vertices;
    Rat cx = 0, cy = 0;
    for (const auto& q : p) {
        cx += q[0];
        cy += q[1];
    }
    cx /= static_cast<unsigned long>(p.size());
    cy /= static_cast<unsigned long>(p.size());
    // Angular order around the vertex centroid, compared exactly.
    auto half = [&](const RatVec& q) {
        Rat dx = q[0] - cx, dy = q[1] - cy;
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(p.begin(), p.end(), [&](const RatVec& a, const RatVec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rat cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
        return cross > 0;
    });
    Rat twice = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& a = p[i];
        const auto& b = p[(i + 1) % p.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
}

} // namespace okb::oracles
