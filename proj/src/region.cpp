#include "ddestab/region.hpp"

#include <algorithm>
#include <cmath>

namespace ddestab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sqrt(w^2 - a^2) without cancellation near w = |a|
double radial_part(double w, double a) {
    const double aa = std::abs(a);
    return std::sqrt((w - aa) * (w + aa));
}

void require_tau(double tau, const char* who) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::invalid_argument(std::string(who) + ": tau must be finite and > 0");
}

// Bisection for boundary_angle(w) = target on a branch where the angle is
// monotone; `increasing` selects the branch direction.
double invert_boundary_angle(double target, double lo, double hi, double a, double tau,
                             bool increasing) {
    for (int i = 0; i < 200 && (hi - lo) > 1e-14 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        const bool below = boundary_angle(mid, a, tau) < target;
        if (below == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double boundary_angle(double w, double a, double tau) {
    require_tau(tau, "boundary_angle");
    if (a == 0.0) return w * tau + kPi / 2.0;
    const double aa = std::abs(a);
    if (w < aa) throw std::domain_error("boundary_angle: w < |a|");
    const double r = radial_part(w, a);
    if (a < 0.0) return r * tau + std::atan(r / aa);
    return r * tau - std::atan(r / a) + kPi;
}

double boundary_angle_argmin(double a, double tau) {
    require_tau(tau, "boundary_angle_argmin");
    if (!(a > 0.0)) throw std::domain_error("boundary_angle_argmin: requires a > 0");
    return std::sqrt(a / tau);
}

double outer_radius(double a, double tau) {
    require_tau(tau, "outer_radius");
    if (a * tau > 1.0) throw std::domain_error("outer_radius: requires a <= 1/tau");
    if (a == 0.0) return kPi / (2.0 * tau);

    double lo, hi;
    if (a < 0.0) {
        // angle grows from 0 at w=|a|; sqrt(w^2-a^2) >= w-|a| gives the bracket
        lo = -a;
        hi = -a + kPi / tau;
    } else {
        const double wm = boundary_angle_argmin(a, tau);  // >= a since a <= 1/tau
        if (boundary_angle(wm, a, tau) >= kPi) return a;  // empty-region edge a = 1/tau
        lo = wm;
        hi = a + kPi / (2.0 * tau) + 1.0;
    }
    return invert_boundary_angle(kPi, lo, hi, a, tau, true);
}

StabilityVerdict membership(Complex eta, double a, double tau, double boundary_tol) {
    require_tau(tau, "membership");
    if (!is_finite(eta) || !std::isfinite(a))
        throw std::invalid_argument("membership: eta and a must be finite");

    if (a * tau > 1.0) return {Status::Unstable, CaseTag::SupercriticalA, eta};

    // -a lies on the region boundary in every case (arc start for a<0, the
    // origin for a=0, the waist point for a>0) and carries a root at s=0.
    if (std::abs(eta + a) <= boundary_tol)
        return {Status::Marginal, CaseTag::Boundary, Complex(0.0, 0.0)};

    const double m = std::abs(eta);
    if (a < 0.0 && m < -a) return {Status::Stable, CaseTag::DiscInterior, std::nullopt};
    if (a > 0.0 && m <= a) return {Status::Unstable, CaseTag::NecessaryFail, eta};

    const double gap = std::abs(std::arg(eta)) - boundary_angle(m, a, tau);
    if (std::abs(gap) <= boundary_tol)
        return {Status::Marginal, CaseTag::Boundary, Complex(0.0, radial_part(m, a))};
    if (gap > 0.0) return {Status::Stable, CaseTag::RegionInterior, std::nullopt};
    if (eta.real() + a > 0.0) return {Status::Unstable, CaseTag::NecessaryFail, eta};
    return {Status::Unstable, CaseTag::RegionInterior, std::nullopt};
}

BoundaryCurve boundary_curve(double a, double tau, std::size_t n) {
    require_tau(tau, "boundary_curve");
    if (n < 2) throw std::invalid_argument("boundary_curve: n must be >= 2");
    if (a * tau > 1.0) throw std::domain_error("boundary_curve: requires a <= 1/tau");

    BoundaryCurve curve{{}, {}, classify_region_case(a, tau), a < 0.0};
    const double outer = outer_radius(a, tau);
    auto push = [&curve](double w, double angle) {
        curve.points.push_back(std::polar(w, angle));
        curve.w_values.push_back(w);
    };
    // arc endpoints on the real axis are pushed exactly, not through polar
    auto push_real = [&curve](double w, double sign) {
        curve.points.push_back(Complex(sign * w, 0.0));
        curve.w_values.push_back(w);
    };

    if (a == 0.0) {
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const double w = outer * static_cast<double>(k) / static_cast<double>(n - 1);
            push(w, boundary_angle(w, a, tau));
        }
        push_real(outer, -1.0);
        return curve;
    }

    if (a < 0.0) {
        // uniform in accumulated angle over [0, pi]
        push_real(-a, 1.0);
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const double target = kPi * static_cast<double>(k) / static_cast<double>(n - 1);
            push(invert_boundary_angle(target, -a, outer, a, tau, true), target);
        }
        push_real(outer, -1.0);
        return curve;
    }

    if (outer <= a) {  // empty-region edge: the arc degenerates to -a
        push_real(a, -1.0);
        return curve;
    }

    // a > 0: the angle runs pi -> minimum at w_m -> pi; sample uniformly along
    // that path so w still increases strictly
    const double wm = boundary_angle_argmin(a, tau);
    const double angle_min = boundary_angle(wm, a, tau);
    const double half = kPi - angle_min;
    push_real(a, -1.0);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double t = 2.0 * half * static_cast<double>(k) / static_cast<double>(n - 1);
        if (t <= half) {
            const double target = kPi - t;
            push(invert_boundary_angle(target, a, wm, a, tau, false), target);
        } else {
            const double target = angle_min + (t - half);
            push(invert_boundary_angle(target, wm, outer, a, tau, true), target);
        }
    }
    push_real(outer, -1.0);
    return curve;
}

RayCoverage classify_ray_coverage(double beta) {
    if (!std::isfinite(beta))
        throw std::invalid_argument("classify_ray_coverage: beta must be finite");
    if (beta >= 0.0) return {beta, RayCoverageKind::FullRay, std::nullopt};
    if (beta <= -kPi / 2.0) return {beta, RayCoverageKind::Empty, std::nullopt};

    // phi(r) = atan(r) + beta - r/(r^2+1) is strictly increasing from beta < 0
    // to beta + pi/2 > 0, so a sign change exists and is unique
    const auto phi = [beta](double r) { return std::atan(r) + beta - r / (r * r + 1.0); };
    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (phi(hi) <= 0.0) {
        hi *= 2.0;
        if (++guard > 4096)
            throw std::runtime_error("classify_ray_coverage: bracket search failed");
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (phi(mid) < 0.0 ? lo : hi) = mid;
    }
    return {beta, RayCoverageKind::TailRay, 0.5 * (lo + hi)};
}

}  // namespace ddestab
