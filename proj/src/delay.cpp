#include "ddestab/delay.hpp"

#include <cmath>

#include "ddestab/region.hpp"

namespace ddestab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lower/upper edge of the set {tau : predicate holds}, assuming the predicate
// is true near 0 and false at hi (stability is lost exactly once as the delay
// grows, so the set is an interval).
template <class Pred>
double bisect_delay(double hi, const Pred& stable_at) {
    double lo = 0.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (stable_at(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

CriticalDelay critical_delay(double a, Complex eta) {
    if (!std::isfinite(a) || !is_finite(eta))
        throw std::invalid_argument("critical_delay: inputs must be finite");

    const double m = std::abs(eta);
    const double aa = std::abs(a);

    if (a < 0.0 && m <= aa) {
        // closed disc: no axis crossing can ever occur, except the pinned
        // root at s=0 when eta = -a (= |a|, on the circle)
        if (eta.real() + a >= 0.0)
            return {DelayKind::NeverStable, std::nullopt, std::nullopt};
        return {DelayKind::AlwaysStable, std::nullopt, std::nullopt};
    }
    if (eta.real() + a >= 0.0)
        return {DelayKind::NeverStable, std::nullopt, std::nullopt};

    // from here Re(eta) + a < 0, hence m > |a| and the crossing frequency is
    // positive
    const double omega = std::sqrt((m - aa) * (m + aa));
    const double arg_abs = std::abs(std::arg(eta));

    if (a < 0.0) {
        const double tau_star = (arg_abs - std::atan(omega / aa)) / omega;
        return {DelayKind::Finite, tau_star, omega};
    }
    if (a == 0.0) {
        const double tau_star = (arg_abs - kPi / 2.0) / m;
        return {DelayKind::Finite, tau_star, omega};
    }

    // a > 0: stability holds for small tau (the tau->0 root is a+eta, left of
    // the axis) and is impossible beyond 1/a; bracket the flip with the
    // membership predicate. Averaging the Stable and not-Unstable edges
    // cancels the Marginal band of width ~boundary_tol.
    const double hi = 1.0 / a;
    const double lower = bisect_delay(hi, [&](double tau) {
        return membership(eta, a, tau).status == Status::Stable;
    });
    const double upper = bisect_delay(hi, [&](double tau) {
        return membership(eta, a, tau).status != Status::Unstable;
    });
    return {DelayKind::Finite, 0.5 * (lower + upper), omega};
}

}  // namespace ddestab
