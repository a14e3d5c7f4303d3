#include <doctest.h>

#include <cmath>

#include "ddestab/oracle.hpp"
#include "ddestab/region.hpp"
#include "helpers.hpp"

using namespace ddestab;
using testing::Rng;
using testing::boundary_distance;
using testing::kTestPi;

TEST_CASE("boundary_angle: values and domain") {
    CHECK(boundary_angle(1.5, -1.5, 1.0) == 0.0);
    CHECK(boundary_angle(0.25, 0.25, 1.0) == doctest::Approx(kTestPi).epsilon(1e-15));
    // frozen: sqrt(1.75) + atan(sqrt(1.75)/1.5)
    CHECK(boundary_angle(2.0, -1.5, 1.0) ==
          doctest::Approx(2.0456099033457109).epsilon(1e-14));
    CHECK(boundary_angle(2.0, 0.0, 0.5) == doctest::Approx(1.0 + kTestPi / 2).epsilon(1e-15));
    CHECK_THROWS_AS(boundary_angle(1.0, -1.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(boundary_angle(0.1, 0.25, 1.0), std::domain_error);
}

TEST_CASE("boundary_angle: strictly increasing for a < 0") {
    double prev = boundary_angle(1.5, -1.5, 2.0);
    for (double w = 1.5 + 1e-3; w < 6.0; w += 1e-3) {
        const double cur = boundary_angle(w, -1.5, 2.0);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("boundary_angle: dip shape for 0 < a < 1/tau") {
    const double a = 0.25, tau = 1.0;
    const double wm = boundary_angle_argmin(a, tau);
    CHECK(wm == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(boundary_angle(wm, a, tau) == doctest::Approx(2.5274078042854148).epsilon(1e-14));
    CHECK(boundary_angle(wm, a, tau) > kTestPi / 2);
    for (double w = a + 1e-4; w < wm - 1e-4; w += 1e-3)
        CHECK(boundary_angle(w, a, tau) > boundary_angle(w + 1e-4, a, tau));
    for (double w = wm + 1e-4; w < 3.0; w += 1e-3)
        CHECK(boundary_angle(w, a, tau) < boundary_angle(w + 1e-4, a, tau));
}

TEST_CASE("boundary_angle_argmin: examples and grid-scan oracle") {
    CHECK(boundary_angle_argmin(0.25, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(boundary_angle_argmin(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(boundary_angle_argmin(0.5, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(boundary_angle_argmin(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(boundary_angle_argmin(-1.0, 1.0), std::domain_error);

    // independent oracle: scan the angle over a fine w grid
    const double a = 0.5, tau = 2.0;
    double best_w = a, best_v = boundary_angle(a, a, tau);
    for (double w = a; w < a + 3.0; w += 1e-5) {
        const double v = boundary_angle(w, a, tau);
        if (v < best_v) {
            best_v = v;
            best_w = w;
        }
    }
    CHECK(std::abs(best_w - boundary_angle_argmin(a, tau)) < 1e-4);
}

namespace {

// independent oracle: coarse sign-change scan of boundary_angle(w) - pi, then
// plain bisection on the bracketing cell
double outer_radius_by_scan(double a, double tau) {
    const double start = std::abs(a) == 0.0 ? 0.0 : std::abs(a);
    const double step = 1e-3;
    double lo = start, hi = start;
    double prev = boundary_angle(std::max(start, std::abs(a)), a, tau) - kTestPi;
    for (double w = start + step; w < start + 2.0 + kTestPi / tau; w += step) {
        const double cur = boundary_angle(w, a, tau) - kTestPi;
        if (prev < 0.0 && cur >= 0.0) {
            lo = w - step;
            hi = w;
            break;
        }
        prev = cur;
    }
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        (boundary_angle(mid, a, tau) < kTestPi ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("outer_radius: closed form, frozen roots, residuals") {
    CHECK(outer_radius(0.0, 2.0) == doctest::Approx(kTestPi / 4).epsilon(1e-15));
    CHECK(outer_radius(-1.5, 1.0) == doctest::Approx(2.6417793936381537).epsilon(1e-12));
    CHECK(outer_radius(0.25, 1.0) == doctest::Approx(1.4155009664057483).epsilon(1e-12));
    CHECK(std::abs(boundary_angle(outer_radius(-1.5, 1.0), -1.5, 1.0) - kTestPi) < 1e-10);
    CHECK(std::abs(boundary_angle(outer_radius(0.25, 1.0), 0.25, 1.0) - kTestPi) < 1e-10);
    CHECK(outer_radius(-1.5, 1.0) ==
          doctest::Approx(outer_radius_by_scan(-1.5, 1.0)).epsilon(1e-10));
    CHECK(outer_radius(0.25, 1.0) ==
          doctest::Approx(outer_radius_by_scan(0.25, 1.0)).epsilon(1e-10));
    CHECK(outer_radius(0.5, 2.0) == 0.5);  // empty-region edge a = 1/tau
    CHECK_THROWS_AS(outer_radius(0.6, 2.0), std::domain_error);
}

TEST_CASE("membership: worked examples") {
    // gamma = 4 rotates inside the region; 4.5 crosses the threshold 20 - 5*pi
    CHECK(membership(std::polar(4.0, -2.0), 0.0, 0.1).status == Status::Stable);
    CHECK(membership(std::polar(4.5, -2.0), 0.0, 0.1).status == Status::Unstable);
    CHECK(count_rhp_roots_retry(0.0, std::polar(4.5, -2.0), 0.1) >= 1);

    // eta = 0 with a < 0: the equation degenerates to x' = a x
    const StabilityVerdict zero = membership({0.0, 0.0}, -1.0, 7.0);
    CHECK(zero.status == Status::Stable);
    CHECK(zero.case_tag == CaseTag::DiscInterior);

    // reduced form of x' = (1/4 + i pi/4) x - (1+i)/sqrt(2) x(t-1)
    CHECK(membership({-1.0, 0.0}, 0.25, 1.0).status == Status::Stable);

    // |eta| < |a| forces stability at any delay
    for (double arg : {0.0, 1.0, kTestPi / 2, kTestPi}) {
        const StabilityVerdict v = membership(std::polar(0.99 * 2.0, arg), -2.0, 100.0);
        CHECK(v.status == Status::Stable);
        CHECK(v.case_tag == CaseTag::DiscInterior);
    }
}

TEST_CASE("membership: -a is marginal in every case") {
    for (double a : {-1.5, 0.0, 0.25}) {
        const StabilityVerdict v = membership({-a, 0.0}, a, 1.0);
        CHECK(v.status == Status::Marginal);
        CHECK(v.case_tag == CaseTag::Boundary);
        REQUIRE(v.witness.has_value());
        CHECK(std::abs(*v.witness) < 1e-9);
    }
}

TEST_CASE("membership: a = 1/tau keeps only the waist point") {
    CHECK(membership({-1.0, 0.0}, 1.0, 1.0).status == Status::Marginal);
    CHECK(membership({-1.2, 0.0}, 1.0, 1.0).status == Status::Unstable);
    CHECK(membership({-0.8, 0.0}, 1.0, 1.0).status == Status::Unstable);
    CHECK(membership({-0.8, 0.0}, 1.0, 1.0).case_tag == CaseTag::NecessaryFail);
    CHECK(membership({0.0, 1.7}, 1.0, 1.0).status == Status::Unstable);
}

TEST_CASE("membership: supercritical a > 1/tau is unstable everywhere") {
    for (Complex eta : {Complex{-2.0, 0.0}, Complex{-5.0, 0.0}, Complex{0.0, 3.0}}) {
        const StabilityVerdict v = membership(eta, 2.0, 1.0);
        CHECK(v.status == Status::Unstable);
        CHECK(v.case_tag == CaseTag::SupercriticalA);
    }
    // cross-check the waist point with the oracle: a root sits at 0 and
    // another strictly right of the axis
    CHECK(count_rhp_roots_retry(2.0, {-2.0, 0.0}, 1.0, -1e-4) >= 1);
}

TEST_CASE("membership: boundary tolerance is configurable") {
    // a point 1e-6 inside the a=0 region: Stable at the default band,
    // Marginal once the band is widened past its gap
    const Complex eta = std::polar(1.0, 1.0 + kTestPi / 2 + 1e-6);
    CHECK(membership(eta, 0.0, 1.0).status == Status::Stable);
    CHECK(membership(eta, 0.0, 1.0, 1e-5).status == Status::Marginal);
    CHECK(membership(eta, 0.0, 1.0, 1e-8).status == Status::Stable);
}

TEST_CASE("membership: conjugation symmetry") {
    Rng rng(99);
    for (int i = 0; i < 300; ++i) {
        const double tau = rng.uniform(0.2, 3.0);
        const double a = rng.uniform(-2.0, 1.0 / tau);
        const Complex eta = rng.box(-3, 1.5, -2.5, 2.5);
        const StabilityVerdict v1 = membership(eta, a, tau);
        const StabilityVerdict v2 = membership(std::conj(eta), a, tau);
        CHECK(v1.status == v2.status);
        CHECK(v1.case_tag == v2.case_tag);
    }
}

TEST_CASE("membership: region shrinks as the delay grows") {
    Rng rng(1234);
    int hits = 0;
    while (hits < 150) {
        const double a = rng.uniform(-2.0, 0.45);
        const Complex eta = rng.box(-3, 1.5, -2.5, 2.5);
        if (membership(eta, a, 2.0).status != Status::Stable) continue;
        ++hits;
        CHECK(membership(eta, a, 1.0).status == Status::Stable);
        CHECK(membership(eta, a, 0.5).status == Status::Stable);
    }
}

TEST_CASE("membership: stable implies the necessary half-plane condition") {
    Rng rng(555);
    int hits = 0;
    while (hits < 200) {
        const double tau = rng.uniform(0.2, 3.0);
        const double a = rng.uniform(-2.0, 1.0 / tau);
        const Complex eta = rng.box(-3, 1.5, -2.5, 2.5);
        if (membership(eta, a, tau).status != Status::Stable) continue;
        ++hits;
        CHECK((eta.real() + a < 0.0 || std::abs(eta) < std::abs(a)));
    }
}

TEST_CASE("membership: interior of the disc is stable for extreme delays") {
    Rng rng(321);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(-3.0, -0.05);
        const Complex eta = rng.annulus(0.0, 0.999 * std::abs(a));
        const double tau = std::pow(10.0, rng.uniform(-3.0, 3.0));
        CHECK(membership(eta, a, tau).status == Status::Stable);
    }
}

TEST_CASE("membership: boundary samples report Marginal") {
    for (double a : {-1.5, 0.0, 0.25})
        for (double tau : {0.5, 1.0, 2.0}) {
            const BoundaryCurve curve = boundary_curve(a, tau, 49);
            for (const Complex eta : curve.points) {
                const StabilityVerdict v = membership(eta, a, tau);
                CHECK(v.status == Status::Marginal);
            }
        }
}

TEST_CASE("membership agrees with root counting off the boundary band") {
    for (double a : {-1.5, 0.0, 0.25}) {
        const double tau = 1.0;
        for (int ix = 0; ix <= 10; ++ix)
            for (int iy = 0; iy <= 10; ++iy) {
                const Complex eta(-3.0 + 0.4 * ix, -2.0 + 0.4 * iy);
                if (boundary_distance(eta, a, tau) < 1e-3) continue;
                const StabilityVerdict v = membership(eta, a, tau);
                if (v.status == Status::Marginal) continue;
                const int count = count_rhp_roots_retry(a, eta, tau);
                CHECK((v.status == Status::Stable) == (count == 0));
                // no root inside the |Re s| <= 1e-7 strip off the boundary band
                CHECK(count_rhp_roots_retry(a, eta, tau, 1e-7) ==
                      count_rhp_roots_retry(a, eta, tau, -1e-7));
            }
    }
}

TEST_CASE("membership agrees with root counting on randomized instances") {
    Rng rng(31415);
    int done = 0;
    while (done < 150) {
        const double tau = rng.uniform(0.1, 3.0);
        const double a = rng.uniform(-2.5, 0.999 / tau);
        const Complex eta = rng.box(-3.0, 2.0, -3.0, 3.0);
        if (boundary_distance(eta, a, tau, 1025) < 2e-3) continue;
        const StabilityVerdict v = membership(eta, a, tau);
        if (v.status == Status::Marginal) continue;
        ++done;
        CHECK((v.status == Status::Stable) == (count_rhp_roots_retry(a, eta, tau) == 0));
    }
}

TEST_CASE("supercritical instances always carry a right-half-plane root") {
    Rng rng(161803);
    for (int i = 0; i < 40; ++i) {
        const double tau = rng.uniform(0.2, 2.0);
        const double a = rng.uniform(1.001 / tau, 3.0 / tau);
        const Complex eta = rng.box(-3.0, 2.0, -2.0, 2.0);
        CHECK(membership(eta, a, tau).status == Status::Unstable);
        CHECK(count_rhp_roots_retry(a, eta, tau) >= 1);
    }
}

TEST_CASE("classify_ray_coverage: examples") {
    CHECK(classify_ray_coverage(0.0).kind == RayCoverageKind::FullRay);
    CHECK(classify_ray_coverage(0.7).kind == RayCoverageKind::FullRay);
    CHECK(classify_ray_coverage(-kTestPi / 2).kind == RayCoverageKind::Empty);
    CHECK(classify_ray_coverage(-1.7).kind == RayCoverageKind::Empty);

    const RayCoverage tail = classify_ray_coverage(-0.3);
    CHECK(tail.kind == RayCoverageKind::TailRay);
    REQUIRE(tail.r0.has_value());
    CHECK(*tail.r0 == doctest::Approx(1.0292118013715134).epsilon(1e-10));
    const double r0 = *tail.r0;
    CHECK(std::abs(std::atan(r0) - r0 / (r0 * r0 + 1.0) - 0.3) < 1e-12);
}

TEST_CASE("classify_ray_coverage: dense-grid sign scan on randomized beta") {
    Rng rng(2025);
    for (int i = 0; i < 200; ++i) {
        const double beta = rng.uniform(-2.0, 1.0);
        const RayCoverage rc = classify_ray_coverage(beta);
        const testing::RaySignScan scan = testing::scan_ray_signs(beta);
        switch (rc.kind) {
            case RayCoverageKind::FullRay:
                CHECK(!scan.any_negative);
                break;
            case RayCoverageKind::TailRay: {
                CHECK(scan.any_negative);
                CHECK(scan.any_nonnegative);
                REQUIRE(rc.r0.has_value());
                const double r0 = *rc.r0;
                CHECK(scan.bracket_lo <= r0);
                CHECK(r0 <= scan.bracket_hi);
                CHECK(std::abs(std::atan(r0) + beta - r0 / (r0 * r0 + 1.0)) <= 1e-12);
                break;
            }
            case RayCoverageKind::Empty:
                // phi < 0 on the whole half-line (its sup is beta + pi/2 <= 0)
                CHECK(!scan.any_nonnegative);
                break;
        }
    }
}

TEST_CASE("boundary_curve: endpoints and ordering per case") {
    const BoundaryCurve neg = boundary_curve(-1.5, 1.0, 65);
    CHECK(neg.closed_by_disc_arc);
    CHECK(neg.region.variant == RegionKind::NegA);
    CHECK(neg.points.front() == Complex{1.5, 0.0});
    CHECK(std::abs(std::arg(neg.points.back()) - kTestPi) < 1e-9);

    const BoundaryCurve zero = boundary_curve(0.0, 1.0, 65);
    CHECK(!zero.closed_by_disc_arc);
    CHECK(std::abs(zero.points.front()) < 1e-12);
    CHECK(std::abs(zero.w_values[1] * 1.0 + kTestPi / 2 - std::arg(zero.points[1])) < 1e-12);
    CHECK(std::abs(zero.points.back()) == doctest::Approx(kTestPi / 2).epsilon(1e-12));
    CHECK(std::abs(std::arg(zero.points.back()) - kTestPi) < 1e-9);

    const BoundaryCurve pos = boundary_curve(0.25, 1.0, 65);
    CHECK(!pos.closed_by_disc_arc);
    CHECK(std::abs(pos.points.front() - Complex{-0.25, 0.0}) < 1e-12);
    CHECK(std::abs(std::arg(pos.points.front()) - kTestPi) < 1e-12);

    for (const BoundaryCurve* curve : {&neg, &zero, &pos}) {
        for (std::size_t i = 0; i + 1 < curve->w_values.size(); ++i)
            CHECK(curve->w_values[i] < curve->w_values[i + 1]);
        for (std::size_t i = 0; i < curve->points.size(); ++i) {
            const Complex eta = curve->points[i];
            if (std::abs(eta) == 0.0) continue;  // arc start for a = 0
            const double angle = boundary_angle(std::max(curve->w_values[i],
                                                         std::abs(curve->region.a)),
                                                curve->region.a, curve->region.tau);
            CHECK(std::abs(std::abs(std::arg(eta)) - angle) < 1e-9);
        }
    }
}

TEST_CASE("boundary_curve: degenerate edge and domain errors") {
    const BoundaryCurve edge = boundary_curve(0.5, 2.0, 16);
    CHECK(edge.points.size() == 1);
    CHECK(std::abs(edge.points.front() - Complex{-0.5, 0.0}) < 1e-12);
    CHECK_THROWS_AS(boundary_curve(0.6, 2.0, 16), std::domain_error);
    CHECK_THROWS_AS(boundary_curve(0.0, 1.0, 1), std::invalid_argument);
}
