"""OWA aggregation, dual weighting vectors and the scalar weight measures."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .errors import DimensionError, ValidationError

WEIGHT_TOL = 1e-12
SUM_TOL = 1e-9


def _frozen(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float).reshape(-1)
    if arr.size < 1:
        raise ValidationError(f"{name} must have length >= 1")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} must be finite")
    arr.setflags(write=False)
    return arr


class WeightVector:
    """Nonnegative weights summing to one, attached to rank positions.

    Entries within ``1e-12`` outside ``[0, 1]`` are clipped back into range;
    anything further out, or a sum off by more than ``1e-9``, is rejected.
    Use :meth:`normalized` to rescale arbitrary nonnegative values.
    """

    __slots__ = ("_w",)

    def __init__(self, weights: Sequence[float] | np.ndarray):
        w = np.array(weights, dtype=float).reshape(-1)
        if w.size < 1:
            raise ValidationError("weight vector must have length >= 1")
        if not np.all(np.isfinite(w)):
            raise ValidationError("weights must be finite")
        if np.any(w < -WEIGHT_TOL) or np.any(w > 1 + WEIGHT_TOL):
            raise ValidationError(f"weights must lie in [0, 1], got {w.tolist()}")
        total = math.fsum(w)
        if abs(total - 1.0) > SUM_TOL:
            raise ValidationError(f"weights must sum to 1, got {total!r}")
        w = np.clip(w, 0.0, 1.0)
        w.setflags(write=False)
        self._w = w

    @classmethod
    def normalized(cls, values: Sequence[float] | np.ndarray) -> WeightVector:
        """Rescale nonnegative values by their sum."""
        v = np.asarray(values, dtype=float).reshape(-1)
        if np.any(v < 0):
            raise ValidationError("cannot normalize negative values")
        total = v.sum()
        if not total > 0:
            raise ValidationError("cannot normalize values summing to zero")
        return cls(v / total)

    @classmethod
    def uniform(cls, n: int) -> WeightVector:
        """``W_A``: the arithmetic mean."""
        _check_n(n)
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def max_vector(cls, n: int) -> WeightVector:
        """``W*``: all weight on the largest argument."""
        _check_n(n)
        w = np.zeros(n)
        w[0] = 1.0
        return cls(w)

    @classmethod
    def min_vector(cls, n: int) -> WeightVector:
        """``W_*``: all weight on the smallest argument."""
        _check_n(n)
        w = np.zeros(n)
        w[-1] = 1.0
        return cls(w)

    @property
    def values(self) -> np.ndarray:
        return self._w

    def __len__(self) -> int:
        return self._w.size

    def __iter__(self):
        return iter(self._w.tolist())

    def __getitem__(self, i):
        return self._w[i]

    def __array__(self, dtype=None, copy=None):
        return self._w if dtype is None else self._w.astype(dtype)

    def __eq__(self, other):
        if isinstance(other, WeightVector):
            return np.array_equal(self._w, other._w)
        return NotImplemented

    def __hash__(self):
        return hash(self._w.tobytes())

    def __repr__(self):
        return f"WeightVector({self._w.tolist()})"


class ArgumentVector:
    """The values ``a_1..a_n`` to aggregate.

    With ``unit_interval=True`` every value must lie in ``[0, 1]``.
    """

    __slots__ = ("_a", "unit_interval")

    def __init__(self, values: Sequence[float] | np.ndarray, unit_interval: bool = False):
        a = _frozen(values, "argument vector")
        if unit_interval and (np.any(a < 0) or np.any(a > 1)):
            raise ValidationError("unit-interval arguments must lie in [0, 1]")
        self._a = a
        self.unit_interval = unit_interval

    @property
    def values(self) -> np.ndarray:
        return self._a

    def ordered(self) -> np.ndarray:
        """Values sorted descending; ties keep their input order."""
        idx = np.argsort(-self._a, kind="stable")
        return self._a[idx]

    def __len__(self) -> int:
        return self._a.size

    def __iter__(self):
        return iter(self._a.tolist())

    def __array__(self, dtype=None, copy=None):
        return self._a if dtype is None else self._a.astype(dtype)

    def __repr__(self):
        flag = ", unit_interval=True" if self.unit_interval else ""
        return f"ArgumentVector({self._a.tolist()}{flag})"


def _check_n(n):
    if int(n) != n or n < 1:
        raise ValidationError(f"dimension must be a positive integer, got {n!r}")


def as_weights(w) -> WeightVector:
    return w if isinstance(w, WeightVector) else WeightVector(w)


def as_arguments(args) -> ArgumentVector:
    return args if isinstance(args, ArgumentVector) else ArgumentVector(args)


def owa_aggregate(args, w) -> float:
    """Weighted sum of the descending-sorted arguments.

    >>> owa_aggregate([0.2, 0.8], [0.7, 0.3])
    0.62
    """
    a = as_arguments(args)
    w = as_weights(w)
    if len(a) != len(w):
        raise DimensionError(f"{len(a)} arguments but {len(w)} weights")
    ordered = a.ordered()
    total = 0.0
    for wi, ai in zip(w.values, ordered):
        total += wi * ai
    # rounding can push the sum a hair past the extreme arguments
    return min(max(total, ordered[-1]), ordered[0])


def dual(w) -> WeightVector:
    """Reverse the weighting vector: ``w_hat[i] = w[n-1-i]``."""
    w = as_weights(w)
    return WeightVector(w.values[::-1])


def is_symmetric(w, tol: float = 0.0) -> bool:
    w = as_weights(w).values
    return bool(np.all(np.abs(w - w[::-1]) <= tol))


def orness(w) -> float:
    """Yager's orness, ``sum_j (n-j)/(n-1) * w_j``.

    A single weight has no max/min character; it is given orness 0.5.
    """
    w = as_weights(w).values
    n = w.size
    if n == 1:
        return 0.5
    return math.fsum((n - j) * w[j - 1] for j in range(1, n + 1)) / (n - 1)


def andness(w) -> float:
    return 1.0 - orness(w)


def dispersion(w) -> float:
    """Entropy ``-sum w_i ln w_i`` with ``0 ln 0 = 0``."""
    w = as_weights(w).values
    nz = w[w > 0]
    return float(max(-np.sum(nz * np.log(nz)), 0.0))
