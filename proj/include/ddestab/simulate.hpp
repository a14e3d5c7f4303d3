#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ddestab/types.hpp"

namespace ddestab {

class InsufficientData : public std::runtime_error {
  public:
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

/// Solution samples on a uniform grid aligned to the delay. The grid starts
/// at -tau so the history segment is part of the record. overflow is set when
/// integration stopped early because |x| exceeded 1e12 (divergence evidence).
struct Trajectory {
    std::vector<double> times;
    std::vector<Complex> values;
    double tau;
    double dt;
    bool overflow;
};

using HistoryFn = std::function<Complex(double)>;

/// Method of steps with classical 4th-order Runge-Kutta. The delayed term is
/// read from the already-computed grid through cubic interpolation, which
/// keeps the one-step order. history is sampled on [-tau, 0]; the horizon is
/// rounded up to a whole number of steps. steps_per_delay must be >= 16.
Trajectory integrate(const DdeProblem& problem, const HistoryFn& history,
                     double horizon, int steps_per_delay);

/// Least-squares slope of log|x(t)| over the trailing tail_fraction of the
/// horizon; samples with |x| < 1e-300 are skipped. Throws InsufficientData
/// when fewer than 10 usable samples remain.
double decay_rate(const Trajectory& trajectory, double tail_fraction);

}  // namespace ddestab
