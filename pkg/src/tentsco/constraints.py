"""Constraint-violation aggregation, comparison rules, and the relaxing schedule.

Points are ranked by a lexicographic key (violation, objective).  Under the
adaptive relaxing rule the stored violation is floored at the current
threshold, so every point inside the relaxed band ties on the first key and
competes on cost; with the threshold at zero the rule reduces to plain
feasibility-first comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from tentsco.problem import Problem


@dataclass(frozen=True)
class Fitness:
    """Objective value plus aggregated constraint violation.

    ``violation`` is floored at the relaxing threshold in effect when the
    point was evaluated; ``raw_violation`` is the unfloored aggregate and is
    what feasibility reporting uses.
    """

    objective: float
    violation: float
    raw_violation: float

    def __post_init__(self):
        if self.violation < 0.0 or self.raw_violation < 0.0:
            raise ValueError("violations must be non-negative")


def raw_violation(x: np.ndarray, problem: Problem) -> float:
    """Unfloored aggregate violation: sum |h_i(x)| + sum max(0, g_j(x)).

    Box bounds are enforced upstream by the sampler and are not counted.
    Equality residuals enter through their absolute value; the inequality
    sum only counts positive (violated) residuals.
    """
    total = 0.0
    eqs = problem.equalities(x)
    for r in np.atleast_1d(eqs):
        total += abs(float(r))
    gs = problem.inequalities(x)
    for g in np.atleast_1d(gs):
        g = float(g)
        if g > 0.0:
            total += g
    return total


def aggregate_violation(x: np.ndarray, problem: Problem, epsilon_r: float = 0.0) -> float:
    """Violation aggregate floored at the relaxing threshold epsilon_r."""
    return max(epsilon_r, raw_violation(x, problem))


def compare(a: Fitness, b: Fitness) -> int:
    """Total order on fitness values: -1 if a precedes b, 1 if b precedes a.

    a precedes b iff a has strictly smaller violation, or equal violation
    and strictly smaller objective.  Exactly equal pairs return 0; callers
    breaking ties keep the incumbent, so refreshment requires strict
    improvement.
    """
    if a.violation != b.violation:
        return -1 if a.violation < b.violation else 1
    if a.objective != b.objective:
        return -1 if a.objective < b.objective else 1
    return 0


def is_better(a: Fitness, b: Fitness) -> bool:
    """True iff a strictly precedes b under compare."""
    return compare(a, b) < 0


@dataclass
class AcrSchedule:
    """Polynomially decaying relaxing threshold, forced to zero.

    The threshold starts at ``epsilon_initial`` and decays as
    ``epsilon_initial * (1 - t / (zero_from_fraction * horizon)) ** decay_exponent``
    until the forcing point at ``zero_from_fraction * horizon``, after which
    it is exactly zero.  The trajectory is non-increasing by construction.
    """

    epsilon_initial: float
    horizon: int
    zero_from_fraction: float = 0.45
    decay_exponent: float = 4.0
    epsilon_current: float = field(init=False)

    def __post_init__(self):
        if self.epsilon_initial < 0.0:
            raise ValueError("epsilon_initial must be non-negative")
        if not 0.0 < self.zero_from_fraction <= 1.0:
            raise ValueError("zero_from_fraction must lie in (0, 1]")
        if self.decay_exponent <= 0.0:
            raise ValueError("decay_exponent must be positive")
        if self.horizon < 0:
            raise ValueError("horizon must be non-negative")
        self.epsilon_current = self.value(0)

    def value(self, iteration: int) -> float:
        """Threshold at the given iteration, without mutating the schedule."""
        if iteration < 0 or iteration > self.horizon:
            raise ValueError(
                f"iteration {iteration} outside [0, {self.horizon}]"
            )
        zero_at = self.zero_from_fraction * self.horizon
        if iteration >= zero_at:
            return 0.0
        return self.epsilon_initial * (1.0 - iteration / zero_at) ** self.decay_exponent

    def step(self, iteration: int) -> float:
        """Advance to the given iteration and return the threshold."""
        eps = self.value(iteration)
        self.epsilon_current = eps
        return eps
