"""Stability analysis of x'(t) = lambda*x(t) + gamma*x(t-tau) with complex
coefficients: explicit region tests, critical delays, argument-principle root
counting, and method-of-steps simulation."""

from ._ddestab import (
    BoundaryCurve,
    CaseTag,
    ContourGrazing,
    CriticalDelay,
    DdeProblem,
    DelayKind,
    InsufficientData,
    RayCoverage,
    RayCoverageKind,
    ReducedProblem,
    RegionCase,
    RegionKind,
    RootReport,
    StabilityVerdict,
    Status,
    Trajectory,
    boundary_angle,
    boundary_angle_argmin,
    boundary_curve,
    characteristic_value,
    classify_ray_coverage,
    classify_region_case,
    count_rhp_roots,
    count_rhp_roots_retry,
    critical_delay,
    crossing_frequency,
    decay_rate,
    integrate,
    membership,
    outer_radius,
    reduce,
    rightmost_roots,
)

__all__ = [
    "BoundaryCurve",
    "CaseTag",
    "ContourGrazing",
    "CriticalDelay",
    "DdeProblem",
    "DelayKind",
    "InsufficientData",
    "RayCoverage",
    "RayCoverageKind",
    "ReducedProblem",
    "RegionCase",
    "RegionKind",
    "RootReport",
    "StabilityVerdict",
    "Status",
    "Trajectory",
    "boundary_angle",
    "boundary_angle_argmin",
    "boundary_curve",
    "characteristic_value",
    "classify_ray_coverage",
    "classify_region_case",
    "count_rhp_roots",
    "count_rhp_roots_retry",
    "critical_delay",
    "crossing_frequency",
    "decay_rate",
    "integrate",
    "membership",
    "outer_radius",
    "reduce",
    "rightmost_roots",
]

__version__ = "0.1.0"
