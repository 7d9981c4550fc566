"""Elliptical density generators and the OWA weights built from them.

A density generator ``g(u)``, ``u >= 0``, determines a symmetric density
``(C/sigma) * g(((x - mu)/sigma)**2)``. The constant ``C`` (and ``sigma``)
cancel in every normalized weight below, so they are never computed.

Two weightings use the generator directly:

* position weights spread over ranks ``1..n`` with ``mu_n = (n+1)/2`` and
  ``sigma_n**2 = (n**2 - 1)/12``; these are symmetric and peak in the
  middle, which damps extreme (possibly biased) arguments;
* argument weights standardize the argument values themselves, so equal
  arguments always get equal weight. These index the original argument
  order and feed a weighted arithmetic mean, not an OWA.

:func:`quantifier_from_density` turns a generator into a RIM quantifier
through a density centered at 0.5 on the unit interval; the resulting
quantifier is self-dual and generates centered weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import WeightVector, as_arguments, as_weights
from .errors import DimensionError, DomainError, ValidationError
from .quantifier import FromDensity

FAMILIES = ("cauchy", "exponential-power", "laplace", "logistic", "normal", "student-t")


@dataclass(frozen=True)
class DensityGenerator:
    """One of the standard generator families.

    ``r`` and ``s`` are required for ``exponential-power`` (``g = exp(-r u**s)``)
    and ``m`` for ``student-t`` (``g = (1 + u/m)**(-(m+1)/2)``).
    """

    family: str
    r: float | None = None
    s: float | None = None
    m: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "exponential-power":
            if self.r is None or self.s is None:
                raise ValidationError("exponential-power needs both r and s")
            if not (self.r > 0 and self.s > 0):
                raise ValidationError(f"exponential-power needs r, s > 0, got r={self.r}, s={self.s}")
        elif self.r is not None or self.s is not None:
            raise ValidationError(f"{self.family} takes no r/s parameters")
        if self.family == "student-t":
            if self.m is None or int(self.m) != self.m or self.m < 1:
                raise ValidationError(f"student-t needs an integer m >= 1, got {self.m!r}")
            object.__setattr__(self, "m", int(self.m))
        elif self.m is not None:
            raise ValidationError(f"{self.family} takes no m parameter")

    def __call__(self, u):
        """Evaluate ``g`` at scalar or array ``u >= 0``."""
        arr = np.asarray(u, dtype=float)
        if np.any(arr < 0):
            raise DomainError("density generators are defined for u >= 0")
        out = self._g(arr)
        return float(out) if out.ndim == 0 else out

    def _g(self, u: np.ndarray) -> np.ndarray:
        fam = self.family
        if fam == "cauchy":
            return 1.0 / (1.0 + u)
        if fam == "exponential-power":
            return np.exp(-self.r * u**self.s)
        if fam == "laplace":
            return np.exp(-np.abs(u))
        if fam == "logistic":
            e = np.exp(-u)
            return e / (1.0 + e) ** 2
        if fam == "normal":
            return np.exp(-u / 2.0)
        # student-t
        return (1.0 + u / self.m) ** (-(self.m + 1) / 2.0)

    def scalar(self, u: float) -> float:
        """Scalar fast path of ``g`` for quadrature integrands (no checks)."""
        fam = self.family
        if fam == "cauchy":
            return 1.0 / (1.0 + u)
        if fam == "exponential-power":
            return math.exp(-self.r * u**self.s)
        if fam == "laplace":
            return math.exp(-abs(u))
        if fam == "logistic":
            e = math.exp(-u)
            return e / (1.0 + e) ** 2
        if fam == "normal":
            return math.exp(-u / 2.0)
        return (1.0 + u / self.m) ** (-(self.m + 1) / 2.0)

    @property
    def non_increasing(self) -> bool:
        # every supported family decreases on u >= 0
        return True

    def describe(self) -> dict:
        d = {"family": self.family}
        for key in ("r", "s", "m"):
            if getattr(self, key) is not None:
                d[key] = getattr(self, key)
        return d


def cauchy() -> DensityGenerator:
    return DensityGenerator("cauchy")


def exponential_power(r: float, s: float) -> DensityGenerator:
    return DensityGenerator("exponential-power", r=r, s=s)


def laplace() -> DensityGenerator:
    return DensityGenerator("laplace")


def logistic() -> DensityGenerator:
    return DensityGenerator("logistic")


def normal() -> DensityGenerator:
    return DensityGenerator("normal")


def student_t(m: int) -> DensityGenerator:
    return DensityGenerator("student-t", m=m)


def eval_generator(g: DensityGenerator, u: float) -> float:
    return g(u)


def position_stats(n: int) -> tuple[float, float]:
    """Mean and population variance of the positions ``1..n``."""
    if int(n) != n or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    return (n + 1) / 2.0, (n * n - 1) / 12.0


def position_weights(g: DensityGenerator, n: int) -> WeightVector:
    """Rank weights ``g(((i - mu_n)/sigma_n)**2)``, normalized."""
    mu, var = position_stats(n)
    if n == 1:
        return WeightVector([1.0])
    i = np.arange(1, n + 1, dtype=float)
    # (i - mu) is an exact integer or half-integer, so mirrored ranks get
    # bit-identical inputs and the weights come out exactly symmetric
    raw = g((i - mu) ** 2 / var)
    return WeightVector(raw / raw.sum())


def argument_weights(g: DensityGenerator, args) -> WeightVector:
    """Per-argument weights from the standardized argument values.

    Standardization uses the sample mean and the population (divide by n)
    standard deviation. If all arguments are equal the weights are uniform.
    """
    a = as_arguments(args).values
    mu = a.mean()
    sigma = math.sqrt(np.mean((a - mu) ** 2))
    if sigma == 0.0:
        return WeightVector.uniform(a.size)
    raw = g(((a - mu) / sigma) ** 2)
    return WeightVector(raw / raw.sum())


def gaussian_argument_weights(args) -> WeightVector:
    return argument_weights(normal(), args)


def weighted_mean(args, w) -> float:
    """``sum w_i a_i`` in the original argument order."""
    a = as_arguments(args).values
    w = as_weights(w).values
    if a.size != w.size:
        raise DimensionError(f"{a.size} arguments but {w.size} weights")
    return float(np.dot(w, a))


def argument_weighted_aggregate(g: DensityGenerator, args) -> float:
    return weighted_mean(args, argument_weights(g, args))


@dataclass(frozen=True)
class UnitDensity:
    """``h(y) = g(((y - 0.5)/scale)**2)`` on ``[0, 1]``, symmetric about 0.5."""

    generator: DensityGenerator
    scale: float = 0.2

    def __post_init__(self):
        if not self.scale > 0:
            raise ValidationError(f"scale must be positive, got {self.scale!r}")

    @property
    def center(self) -> float:
        return 0.5

    def pdf(self, y: float) -> float:
        z = (y - 0.5) / self.scale
        return self.generator.scalar(z * z)


def quantifier_from_density(d: UnitDensity) -> FromDensity:
    """``Q(x) = K * integral_0^x h`` with ``K`` normalizing the mass on ``[0, 1]``."""
    return FromDensity(d)


def is_centered(w, sym_tol: float = 1e-9, strict_tol: float = 1e-12) -> bool:
    """Whether ``w`` is a centered weighting vector.

    Requires symmetry, strictly positive entries, and strict increase towards
    the middle from both ends. For even ``n`` the two middle weights are
    equal by symmetry and are not compared with each other.
    """
    w = as_weights(w).values
    n = w.size
    if np.any(np.abs(w - w[::-1]) > sym_tol):
        return False
    if np.any(w <= 0):
        return False
    half = (n + 1) / 2.0
    for j in range(2, n + 1):
        # 1-based ranks j-1 < j
        if j <= half and not w[j - 1] - w[j - 2] > strict_tol:
            return False
        if j - 1 >= half and not w[j - 2] - w[j - 1] > strict_tol:
            return False
    return True
