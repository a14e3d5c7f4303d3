#pragma once

#include <cstddef>
#include <vector>

#include "ddestab/types.hpp"

namespace ddestab {

/// Tolerance (radians / eta-plane units) separating Marginal from
/// Stable/Unstable in membership tests.
inline constexpr double kBoundaryTol = 1e-9;

/// Continuous argument accumulated by the upper boundary arc at magnitude w.
///   a < 0 : sqrt(w^2-a^2)*tau + atan(sqrt(w^2-a^2)/|a|), increasing from 0
///   a = 0 : w*tau + pi/2
///   a > 0 : sqrt(w^2-a^2)*tau - atan(sqrt(w^2-a^2)/a) + pi, starts at pi,
///           dips to a minimum at w = sqrt(a/tau), then increases
/// Throws std::domain_error when w < |a|.
double boundary_angle(double w, double a, double tau);

/// Magnitude w = sqrt(a/tau) at which boundary_angle attains its minimum for
/// a > 0. Values <= a signal that the angle is monotone on its domain
/// (that happens exactly when a >= 1/tau). Throws std::domain_error for a <= 0.
double boundary_angle_argmin(double a, double tau);

/// Outer magnitude bound of the stability region: the magnitude at which the
/// upper boundary arc reaches the negative real axis. pi/(2*tau) for a = 0,
/// otherwise the root of boundary_angle(w) = pi. Returns a at the empty-region
/// edge a = 1/tau. Throws std::domain_error when a > 1/tau.
double outer_radius(double a, double tau);

/// Decide whether eta lies inside (Stable), on (Marginal), or outside
/// (Unstable) the stability region for the reduced equation
/// z' = a*z + eta*z(t-tau). Total: every input gets a verdict.
StabilityVerdict membership(Complex eta, double a, double tau,
                            double boundary_tol = kBoundaryTol);

/// Sampled upper boundary arc, from the arc start (w=|a|, or 0 when a=0) out
/// to the outer radius. The lower half is the conjugate mirror. For a < 0 the
/// closed_by_disc_arc flag tells consumers to draw the |eta| = |a| circle as
/// well. Samples are uniform in accumulated boundary angle.
struct BoundaryCurve {
    std::vector<Complex> points;
    std::vector<double> w_values;
    RegionCase region;
    bool closed_by_disc_arc;
};

/// n samples of the upper boundary arc. Degenerates to the single point -a at
/// the empty-region edge a = 1/tau. Throws std::domain_error when a > 1/tau.
BoundaryCurve boundary_curve(double a, double tau, std::size_t n);

enum class RayCoverageKind { FullRay, TailRay, Empty };

/// Solution set {r >= 0 : r/(r^2+1) <= atan(r) + beta}, which is a full ray,
/// a tail ray [r0, inf), or empty. Controls how many extrema the
/// delay-versus-magnitude function has along a ray of the eta plane.
struct RayCoverage {
    double beta;
    RayCoverageKind kind;
    std::optional<double> r0;
};

RayCoverage classify_ray_coverage(double beta);

}  // namespace ddestab
