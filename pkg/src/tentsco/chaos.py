"""Deterministic tent-map chaos streams.

The solver draws every random-looking number from a tent-map iterator
instead of a PRNG.  The map itself is the piecewise-linear doubling map on
[0, 1]; a warmed-up stream wraps it with degeneracy avoidance so that the
emitted sequence stays inside (0, 1), never revisits its last few values,
and never collapses into the map's unstable points.

In IEEE doubles the raw map is exact arithmetic: every step strips one bit
of mantissa, so any orbit drains to a coarse dyadic lattice (multiples of
1/4, 1/8, ...) within ~50 steps and then dies at 0.  The stream therefore
restarts the orbit whenever the iterate becomes a shallow dyadic rational,
nudging it by ``epsilon_nudge`` plus a golden-ratio phase keyed to the
seed.  The phase never repeats, so distinct seeds yield streams that stay
distinct forever and a single stream never settles into a cycle.
"""

from __future__ import annotations

import math

# Unstable points of the map; seeding here drops straight into the fixed
# point at 0.
FORBIDDEN_SEEDS = (0.0, 0.25, 0.5, 0.75, 1.0)

# Orbits are restarted once the iterate is an exact multiple of 2^-24:
# below that depth only the degenerate dyadic tail of the orbit remains.
_DEPTH_SCALE = float(1 << 24)

# Golden-ratio conjugate, the classic low-discrepancy rotation increment.
_WEYL_STEP = (math.sqrt(5.0) - 1.0) / 2.0


def tent_next(x: float) -> float:
    """One application of the tent map: 2x below 1/2, else 2(1 - x)."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"tent map input must lie in [0, 1], got {x}")
    return 2.0 * x if x <= 0.5 else 2.0 * (1.0 - x)


def scale_to_interval(x: float, lo: float, hi: float) -> float:
    """Affine map of a unit value onto [lo, hi]."""
    if lo > hi:
        raise ValueError(f"interval endpoints out of order: [{lo}, {hi}]")
    return lo + x * (hi - lo)


class TentStream:
    """Warmed-up tent-map iterator emitting values strictly inside (0, 1).

    Parameters
    ----------
    seed : float
        Initial value in (0, 1), outside ``FORBIDDEN_SEEDS``.
    warmup_count : int
        Number of advances performed before the stream is used (about 300).
    epsilon_nudge : float
        Base offset applied when the orbit degenerates.

    A stream is single-owner mutable state: two streams built with the same
    arguments emit identical sequences, and a stream must not be shared
    between concurrent runs.
    """

    __slots__ = ("current", "history", "epsilon_nudge", "warmup_count", "_phase")

    def __init__(self, seed: float, warmup_count: int = 300, epsilon_nudge: float = 1e-3):
        if seed in FORBIDDEN_SEEDS:
            raise ValueError(
                f"seed {seed} is an unstable point of the tent map; re-seed "
                f"away from {FORBIDDEN_SEEDS}"
            )
        if not 0.0 < seed < 1.0:
            raise ValueError(f"seed must lie strictly in (0, 1), got {seed}")
        if warmup_count < 0:
            raise ValueError("warmup_count must be non-negative")
        self.current = seed
        self.history = [seed]
        self.epsilon_nudge = epsilon_nudge
        self.warmup_count = warmup_count
        self._phase = seed
        for _ in range(warmup_count):
            self.next_unit()

    def next_unit(self) -> float:
        """Advance the stream and return the next value in (0, 1)."""
        x = tent_next(self.current)
        # Restart on shallow dyadic rationals (which include the unstable
        # points 0, 1/4, 1/2, 3/4, 1) and on exact repeats of the last four
        # emitted values.  The restart point mixes the nudge with a
        # seed-keyed Weyl phase so orbits from different seeds never merge.
        while (x * _DEPTH_SCALE).is_integer() or x in self.history:
            self._phase = (self._phase + _WEYL_STEP) % 1.0
            x = (x + self.epsilon_nudge + self._phase) % 1.0
        self.current = x
        hist = self.history
        hist.append(x)
        if len(hist) > 4:
            hist.pop(0)
        return x

    def draw(self, lo: float, hi: float) -> float:
        """Next chaotic value scaled onto [lo, hi]."""
        return scale_to_interval(self.next_unit(), lo, hi)

    def draw_index(self, n: int) -> int:
        """Next chaotic value quantized to an index in [0, n)."""
        idx = int(self.draw(0.0, float(n)))
        return n - 1 if idx >= n else idx
