"""Time-optimal turn-rate-constrained path planning in uniform wind.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface.
"""

from ._core import (
    PathWord,
    Pose,
    VehicleLimits,
    Wind,
    PlanResult,
    baseline_plan,
    decision_table,
    plan,
    run_bench,
    shortest_dubins,
    validate_table,
)

__all__ = [
    "PathWord",
    "Pose",
    "VehicleLimits",
    "Wind",
    "PlanResult",
    "baseline_plan",
    "decision_table",
    "plan",
    "run_bench",
    "shortest_dubins",
    "validate_table",
]

__version__ = "0.1.0"
