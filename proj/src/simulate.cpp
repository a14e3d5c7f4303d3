#include "ddestab/simulate.hpp"

#include <algorithm>
#include <cmath>

namespace ddestab {

namespace {

constexpr double kOverflowCap = 1e12;

// Cubic Lagrange interpolation at the midpoint between grid nodes k and k+1,
// on a 4-point stencil clamped to the available range.
Complex half_step_value(const std::vector<Complex>& values, std::size_t k) {
    const std::size_t last = values.size() - 1;
    std::size_t base = (k == 0) ? 0 : k - 1;
    if (base + 3 > last) base = last - 3;
    const double p = static_cast<double>(k) - static_cast<double>(base) + 0.5;
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < 4; ++j) {
        double weight = 1.0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == j) continue;
            weight *= (p - static_cast<double>(i)) /
                      (static_cast<double>(j) - static_cast<double>(i));
        }
        acc += weight * values[base + j];
    }
    return acc;
}

}  // namespace

Trajectory integrate(const DdeProblem& problem, const HistoryFn& history, double horizon,
                     int steps_per_delay) {
    if (steps_per_delay < 16)
        throw std::invalid_argument("integrate: steps_per_delay must be >= 16");
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw std::invalid_argument("integrate: horizon must be finite and > 0");
    if (!history) throw std::invalid_argument("integrate: history function required");

    const double tau = problem.tau;
    const double dt = tau / steps_per_delay;
    const std::size_t history_steps = static_cast<std::size_t>(steps_per_delay);
    const std::size_t forward_steps =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9)));

    Trajectory out;
    out.tau = tau;
    out.dt = dt;
    out.overflow = false;
    out.times.reserve(history_steps + forward_steps + 1);
    out.values.reserve(history_steps + forward_steps + 1);

    for (std::size_t i = 0; i <= history_steps; ++i) {
        const double t = (static_cast<double>(i) - static_cast<double>(history_steps)) * dt;
        out.times.push_back(t);
        out.values.push_back(history(std::min(t, 0.0)));
    }

    const Complex lambda = problem.lambda;
    const Complex gamma = problem.gamma;
    const auto rhs = [&](Complex x, Complex delayed) { return lambda * x + gamma * delayed; };

    for (std::size_t step = 0; step < forward_steps; ++step) {
        const std::size_t j = history_steps + step;  // index of the step start
        const std::size_t d = step;                  // index of t_j - tau
        const Complex x = out.values[j];
        const Complex del0 = out.values[d];
        const Complex delh = half_step_value(out.values, d);
        const Complex del1 = out.values[d + 1];

        const Complex k1 = rhs(x, del0);
        const Complex k2 = rhs(x + 0.5 * dt * k1, delh);
        const Complex k3 = rhs(x + 0.5 * dt * k2, delh);
        const Complex k4 = rhs(x + dt * k3, del1);
        const Complex next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        out.times.push_back(out.times[j] + dt);
        out.values.push_back(next);
        if (std::abs(next) > kOverflowCap) {
            out.overflow = true;
            break;
        }
    }
    return out;
}

double decay_rate(const Trajectory& trajectory, double tail_fraction) {
    if (trajectory.times.empty())
        throw std::invalid_argument("decay_rate: empty trajectory");
    if (!(tail_fraction > 0.0) || !(tail_fraction <= 0.5))
        throw std::invalid_argument("decay_rate: tail_fraction must be in (0, 0.5]");

    const double t_end = trajectory.times.back();
    const double t_from = t_end - tail_fraction * t_end;

    // least-squares slope of log|x| over the tail
    double n = 0.0, st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        const double t = trajectory.times[i];
        if (t < t_from) continue;
        const double mag = std::abs(trajectory.values[i]);
        if (mag < 1e-300) continue;
        const double y = std::log(mag);
        n += 1.0;
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    if (n < 10.0) throw InsufficientData("decay_rate: fewer than 10 usable tail samples");
    const double denom = n * stt - st * st;
    if (denom == 0.0) throw InsufficientData("decay_rate: degenerate time grid");
    return (n * sty - st * sy) / denom;
}

}  // namespace ddestab
