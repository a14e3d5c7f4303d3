#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "ddestab/region.hpp"
#include "ddestab/types.hpp"

namespace ddestab::testing {

inline constexpr double kTestPi = 3.14159265358979323846;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }
    Complex annulus(double r_lo, double r_hi) {
        return std::polar(uniform(r_lo, r_hi), uniform(-kTestPi, kTestPi));
    }
};

inline double segment_distance(Complex p, Complex s0, Complex s1) {
    const Complex d = s1 - s0;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - s0);
    double t = ((p.real() - s0.real()) * d.real() + (p.imag() - s0.imag()) * d.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (s0 + t * d));
}

// Polyline approximation of the region boundary (sampled arc plus its mirror)
// for distance queries.
struct BoundaryPolyline {
    std::vector<Complex> pts;

    BoundaryPolyline(double a, double tau, std::size_t n = 2049)
        : pts(boundary_curve(a, tau, n).points) {}

    double distance(Complex eta) const {
        double best = std::abs(eta - pts.front());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            best = std::min(best, segment_distance(eta, pts[i], pts[i + 1]));
            best = std::min(best,
                            segment_distance(eta, std::conj(pts[i]), std::conj(pts[i + 1])));
        }
        return std::min(best, std::abs(eta - pts.back()));
    }
};

// Distance from eta to the region boundary (the sampled arc and its mirror).
inline double boundary_distance(Complex eta, double a, double tau, std::size_t n = 2049) {
    return BoundaryPolyline(a, tau, n).distance(eta);
}

// Dense sign scan of phi(r) = atan(r) + beta - r/(r^2+1) over the whole
// half-line (grid in u with r = tan(u)). bracket_lo/hi frame the first
// nonnegative sample when a sign change is present.
struct RaySignScan {
    bool any_negative = false;
    bool any_nonnegative = false;
    double bracket_lo = -1.0;
    double bracket_hi = -1.0;
};

inline RaySignScan scan_ray_signs(double beta, int cells = 40000) {
    RaySignScan scan;
    double prev_r = 0.0;
    for (int j = 0; j < cells; ++j) {
        const double u = (kTestPi / 2.0 - 1e-6) * j / (cells - 1);
        const double r = std::tan(u);
        const double phi = std::atan(r) + beta - r / (r * r + 1.0);
        if (phi < 0.0) {
            scan.any_negative = true;
        } else if (!scan.any_nonnegative) {
            scan.any_nonnegative = true;
            scan.bracket_lo = prev_r;
            scan.bracket_hi = r;
        }
        prev_r = r;
    }
    return scan;
}

}  // namespace ddestab::testing
