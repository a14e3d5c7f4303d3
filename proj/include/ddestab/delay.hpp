#pragma once

#include "ddestab/types.hpp"

namespace ddestab {

enum class DelayKind { AlwaysStable, NeverStable, Finite };

/// Critical delay of the reduced pair (a, eta): the supremum of delays for
/// which every characteristic root stays strictly left of the axis.
struct CriticalDelay {
    DelayKind kind;
    std::optional<double> tau_star;       // set iff kind == Finite
    std::optional<double> crossing_omega; // set iff kind == Finite
};

/// AlwaysStable when a<0 and |eta|<=|a| (excluding eta=-a) or eta=0 with a<=0;
/// NeverStable when a root sits in the closed right half-plane for every
/// delay; Finite otherwise, with the closed-form delay for a<=0 and a
/// membership bisection on (0, 1/a] for a>0.
CriticalDelay critical_delay(double a, Complex eta);

}  // namespace ddestab
