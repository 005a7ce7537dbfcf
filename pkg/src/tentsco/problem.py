"""Generic constrained-minimization problem container."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class Problem:
    """A box-bounded NLP: minimize f(x) s.t. g(x) <= 0, h(x) = 0.

    All callables must be pure; a Problem is immutable and may be shared
    between concurrent solver runs.
    """

    objective: Callable[[np.ndarray], float]
    equalities: Callable[[np.ndarray], np.ndarray]
    inequalities: Callable[[np.ndarray], np.ndarray]
    lower: np.ndarray
    upper: np.ndarray
    name: str = ""
    n_equalities: int = 0
    n_inequalities: int = 0

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if lower.shape != upper.shape:
            raise ValueError("bound arrays must have matching shapes")
        if np.any(lower > upper):
            raise ValueError("lower bounds exceed upper bounds")

    @property
    def dimension(self) -> int:
        return self.lower.size

    def in_bounds(self, x: np.ndarray, tol: float = 0.0) -> bool:
        return bool(np.all(x >= self.lower - tol) and np.all(x <= self.upper + tol))
