#pragma once

#include "ddestab/types.hpp"

namespace ddestab {

/// Rotate the delayed coefficient by e^{-i*Im(lambda)*tau} so the non-delayed
/// coefficient becomes real. The rotation preserves |gamma| and the real
/// parts of all characteristic roots.
ReducedProblem reduce(const DdeProblem& problem);

/// Imaginary-axis crossing frequency omega = sqrt(eta_mod^2 - a^2).
/// Empty when eta_mod < |a|: no root can reach the axis for any delay.
std::optional<double> crossing_frequency(double a, double eta_mod);

/// Value of the characteristic function s - a - eta*e^{-s*tau}.
Complex characteristic_value(Complex s, double a, Complex eta, double tau);

/// Same with a complex non-delayed coefficient (the unreduced equation).
Complex characteristic_value(Complex s, Complex lambda, Complex gamma, double tau);

}  // namespace ddestab
