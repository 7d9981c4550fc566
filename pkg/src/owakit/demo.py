"""Biased-argument robustness harness.

Each trial draws a panel of ``n`` scores uniformly from a fixed band, then
pushes one randomly chosen score up by ``magnitude`` band-widths. For every
scheme we record how far its aggregate of the contaminated panel lands from
the arithmetic mean of the clean panel, and report the mean over trials.

Randomness comes from numpy's PCG64 bit generator seeded with ``seed``, so
a given ``(n, magnitude, trials, seed)`` always reproduces the same table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import owa_aggregate
from .elliptical import cauchy, gaussian_argument_weights, normal, position_weights, weighted_mean
from .errors import ValidationError

BAND = (0.4, 0.6)
SCHEMES = ("arithmetic-mean", "normal-position-owa", "cauchy-position-owa", "normal-argument-weights")


@dataclass(frozen=True)
class BiasDemoResult:
    n: int
    magnitude: float
    trials: int
    seed: int
    deviations: dict

    def rows(self):
        return [(name, self.deviations[name]) for name in SCHEMES]


def run_bias_demo(n: int = 9, magnitude: float = 10.0, trials: int = 1000, seed: int = 42) -> BiasDemoResult:
    if n < 5:
        raise ValidationError(f"demo needs n >= 5, got {n}")
    if trials < 1:
        raise ValidationError(f"demo needs trials >= 1, got {trials}")
    rng = np.random.Generator(np.random.PCG64(seed))
    lo, hi = BAND
    w_normal = position_weights(normal(), n)
    w_cauchy = position_weights(cauchy(), n)

    totals = dict.fromkeys(SCHEMES, 0.0)
    for _ in range(trials):
        clean = rng.uniform(lo, hi, size=n)
        dirty = clean.copy()
        dirty[rng.integers(n)] += magnitude * (hi - lo)
        target = clean.mean()
        totals["arithmetic-mean"] += abs(dirty.mean() - target)
        totals["normal-position-owa"] += abs(owa_aggregate(dirty, w_normal) - target)
        totals["cauchy-position-owa"] += abs(owa_aggregate(dirty, w_cauchy) - target)
        totals["normal-argument-weights"] += abs(
            weighted_mean(dirty, gaussian_argument_weights(dirty)) - target
        )
    return BiasDemoResult(
        n=n,
        magnitude=float(magnitude),
        trials=trials,
        seed=seed,
        deviations={k: v / trials for k, v in totals.items()},
    )
