"""Tent-map social cognitive optimization for combined heat and power dispatch.

A population solver for constrained nonlinear programs built around a
deterministic tent-map chaos stream, a shared knowledge library with
tournament learning, and an adaptive constraint-relaxing comparator,
packaged with the two classic cogeneration dispatch benchmark systems.
"""

from tentsco.chaos import TentStream, tent_next, scale_to_interval
from tentsco.problem import Problem
from tentsco.constraints import (
    AcrSchedule,
    Fitness,
    aggregate_violation,
    compare,
    is_better,
    raw_violation,
)
from tentsco.sco import (
    KnowledgeLibrary,
    KnowledgePoint,
    RunResult,
    SolverConfig,
    initialize,
    local_search,
    refresh_library,
    run,
    tournament_select,
)
from tentsco.chped import build_case1, build_case2, ChpedSystem

__all__ = [
    "AcrSchedule",
    "ChpedSystem",
    "Fitness",
    "KnowledgeLibrary",
    "KnowledgePoint",
    "Problem",
    "RunResult",
    "SolverConfig",
    "TentStream",
    "aggregate_violation",
    "build_case1",
    "build_case2",
    "compare",
    "initialize",
    "is_better",
    "local_search",
    "raw_violation",
    "refresh_library",
    "run",
    "scale_to_interval",
    "tent_next",
    "tournament_select",
]
