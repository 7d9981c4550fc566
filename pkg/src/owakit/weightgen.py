"""Weighting vectors generated by RIM quantifiers.

Direct (Yager) weights put ``Q(i/n) - Q((i-1)/n)`` on rank ``i``; dual
weights read the quantifier from the top, ``Q(1-(i-1)/n) - Q(1-i/n)``, and
are exactly the reversal of the direct ones. The WOWA variants replace
``i/n`` with partial sums of an importance vector ``p``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .core import SUM_TOL, WeightVector, as_arguments, owa_aggregate
from .errors import DimensionError, ValidationError
from .quantifier import Quantifier

NEGATIVE_CLAMP = 1e-12


class ProbabilityVector:
    """Importance weights ``p`` attached to the arguments themselves."""

    __slots__ = ("_p",)

    def __init__(self, probs: Sequence[float] | np.ndarray):
        p = np.array(probs, dtype=float).reshape(-1)
        if p.size < 1:
            raise ValidationError("probability vector must have length >= 1")
        if not np.all(np.isfinite(p)) or np.any(p < 0):
            raise ValidationError(f"probabilities must be finite and nonnegative, got {p.tolist()}")
        if abs(math.fsum(p) - 1.0) > SUM_TOL:
            raise ValidationError(f"probabilities must sum to 1, got {math.fsum(p)!r}")
        p.setflags(write=False)
        self._p = p

    @classmethod
    def uniform(cls, n: int) -> ProbabilityVector:
        return cls(np.full(n, 1.0 / n))

    @property
    def values(self) -> np.ndarray:
        return self._p

    def partial_sums(self) -> np.ndarray:
        """``S_0 = 0, S_i = p_1 + ... + p_i``, with ``S_n`` pinned to 1.

        Pinning the last sum matters for quantifiers such as ``all`` that
        jump exactly at 1.
        """
        s = np.concatenate(([0.0], np.cumsum(self._p)))
        s[-1] = 1.0
        return np.clip(s, 0.0, 1.0)

    def __len__(self):
        return self._p.size

    def __array__(self, dtype=None, copy=None):
        return self._p if dtype is None else self._p.astype(dtype)

    def __repr__(self):
        return f"ProbabilityVector({self._p.tolist()})"


def _as_probs(p) -> ProbabilityVector:
    return p if isinstance(p, ProbabilityVector) else ProbabilityVector(p)


def _check_n(n):
    if int(n) != n or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    return int(n)


def _differences(upper: np.ndarray, lower: np.ndarray) -> WeightVector:
    w = upper - lower
    worst = w.min()
    if worst < -NEGATIVE_CLAMP:
        raise ValidationError(
            f"quantifier produced a negative weight ({worst!r}); it is not monotone"
        )
    return WeightVector(np.maximum(w, 0.0))


def weights_from_quantifier(q: Quantifier, n: int) -> WeightVector:
    """Yager weights ``w_i = Q(i/n) - Q((i-1)/n)``."""
    n = _check_n(n)
    qv = q.values(np.arange(n + 1) / n)
    return _differences(qv[1:], qv[:-1])


def dual_weights_from_quantifier(q: Quantifier, n: int) -> WeightVector:
    """Dual weights ``Q(1-(i-1)/n) - Q(1-i/n)``.

    The points ``1 - j/n`` are formed as ``(n-j)/n`` so they coincide
    bit-for-bit with the direct grid; the result is then exactly the
    reversal of :func:`weights_from_quantifier`.
    """
    n = _check_n(n)
    i = np.arange(1, n + 1)
    upper = q.values((n - i + 1) / n)
    lower = q.values((n - i) / n)
    return _differences(upper, lower)


def wowa_weights(q: Quantifier, p) -> WeightVector:
    """``q_i = Q(S_i) - Q(S_{i-1})`` with ``S`` the partial sums of ``p``."""
    s = _as_probs(p).partial_sums()
    qv = q.values(s)
    return _differences(qv[1:], qv[:-1])


def dual_wowa_weights(q: Quantifier, p) -> WeightVector:
    """``q~_i = Q(1 - S_{i-1}) - Q(1 - S_i)``."""
    s = _as_probs(p).partial_sums()
    qv = q.values(1.0 - s)
    return _differences(qv[:-1], qv[1:])


def dual_wowa_aggregate(q: Quantifier, p, args) -> float:
    """Dual WOWA in telescoped form.

    ``a_(1) + sum_{i>=2} Q(1 - S_{i-1}) * (a_(i) - a_(i-1))`` over the
    descending order statistics. Agrees with
    ``owa_aggregate(args, dual_wowa_weights(q, p))`` up to rounding.
    """
    p = _as_probs(p)
    a = as_arguments(args)
    if len(a) != len(p):
        raise DimensionError(f"{len(a)} arguments but {len(p)} probabilities")
    ordered = a.ordered()
    s = p.partial_sums()
    coeff = q.values(1.0 - s[1:-1])
    return float(ordered[0] + np.sum(coeff * np.diff(ordered)))


def wowa_aggregate(q: Quantifier, p, args) -> float:
    return owa_aggregate(args, wowa_weights(q, p))
