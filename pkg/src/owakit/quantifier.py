"""RIM quantifiers and their orness, dominance and convexity checks.

A RIM (regular increasing monotone) quantifier is a nondecreasing map
``Q: [0, 1] -> [0, 1]`` with ``Q(0) = 0`` and ``Q(1) = 1``. Every concrete
quantifier below validates those properties on a 1001-point grid when it is
constructed; a quantifier that wiggles between grid points is not detected.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ValidationError
from .numerics import QuadratureSpec, integrate

VALIDATION_GRID = 1000
ENDPOINT_TOL = 1e-9
MONOTONE_TOL = 1e-12
ALPHA_TOL = 1e-12
GENERATOR_MASS_TOL = 1e-6

# Tighter than the public default: Q values feed differences of nearby
# points, and the orness integral nests another quadrature around them.
INNER_SPEC = QuadratureSpec(tolerance=1e-11, max_depth=40)
ORNESS_SPEC = QuadratureSpec(tolerance=1e-9, max_depth=40)


def _check_unit(x: float) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"quantifier argument must lie in [0, 1], got {x!r}")
    return x


def grid(m: int) -> np.ndarray:
    """The points ``k/m`` for ``k = 0..m``, exact at both ends."""
    return np.arange(m + 1) / m


class Quantifier:
    """Base class. Subclasses implement ``_eval`` for ``x`` in ``[0, 1]``."""

    def __call__(self, x: float) -> float:
        return self._eval(_check_unit(x))

    def _eval(self, x: float) -> float:
        raise NotImplementedError

    def values(self, xs) -> np.ndarray:
        """Evaluate at many points at once."""
        xs = np.asarray(xs, dtype=float)
        if np.any(xs < 0) or np.any(xs > 1):
            raise DomainError("quantifier arguments must lie in [0, 1]")
        return np.array([self._eval(float(x)) for x in xs.reshape(-1)]).reshape(xs.shape)

    def orness(self) -> float:
        """``integral_0^1 Q(r) dr``."""
        return integrate(self._eval, 0.0, 1.0, ORNESS_SPEC)

    def _validate(self):
        v = self.values(grid(VALIDATION_GRID))
        if abs(v[0]) > ENDPOINT_TOL or abs(v[-1] - 1.0) > ENDPOINT_TOL:
            raise ValidationError(
                f"{self!r} is not a RIM quantifier: Q(0)={v[0]!r}, Q(1)={v[-1]!r}"
            )
        if np.any(np.diff(v) < -MONOTONE_TOL):
            k = int(np.argmin(np.diff(v)))
            raise ValidationError(
                f"{self!r} is not nondecreasing near x={(k + 1) / VALIDATION_GRID}"
            )


@dataclass(frozen=True)
class Identity(Quantifier):
    """``Q_A(x) = x``; generates the arithmetic mean."""

    def _eval(self, x):
        return x

    def orness(self):
        return 0.5


@dataclass(frozen=True)
class All(Quantifier):
    """``Q_*``: 1 only at ``x = 1``; generates the min."""

    def _eval(self, x):
        return 1.0 if x == 1.0 else 0.0

    def orness(self):
        return 0.0


@dataclass(frozen=True)
class Exists(Quantifier):
    """``Q^*``: 0 only at ``x = 0``; generates the max."""

    def _eval(self, x):
        return 0.0 if x == 0.0 else 1.0

    def orness(self):
        return 1.0


@dataclass(frozen=True)
class ThresholdStep(Quantifier):
    """0 below ``t``, 1 from ``t`` on."""

    t: float

    def __post_init__(self):
        if not 0.0 < self.t <= 1.0:
            raise ValidationError(f"threshold must lie in (0, 1], got {self.t!r}")

    def _eval(self, x):
        return 1.0 if x >= self.t else 0.0

    def orness(self):
        return 1.0 - self.t


@dataclass(frozen=True)
class TrimmedLinear(Quantifier):
    """0 up to ``lo``, linear to 1 at ``hi``, then 1.

    With ``lo = 1/n`` and ``hi = (n-1)/n`` this produces the olympic
    weights: zero for the two extreme positions, equal in between.
    """

    lo: float
    hi: float

    def __post_init__(self):
        if not 0.0 <= self.lo < self.hi <= 1.0:
            raise ValidationError(
                f"need 0 <= lo < hi <= 1, got lo={self.lo!r}, hi={self.hi!r}"
            )

    def _eval(self, x):
        if x <= self.lo:
            return 0.0
        if x >= self.hi:
            return 1.0
        return (x - self.lo) / (self.hi - self.lo)

    def orness(self):
        return (1.0 - self.hi) + 0.5 * (self.hi - self.lo)


@dataclass(frozen=True)
class Power(Quantifier):
    """``Q(x) = x**r``: convex for ``r >= 1``, concave for ``r <= 1``."""

    r: float

    def __post_init__(self):
        if not self.r > 0:
            raise ValidationError(f"power exponent must be positive, got {self.r!r}")

    def _eval(self, x):
        return x**self.r

    def orness(self):
        return 1.0 / (1.0 + self.r)


@dataclass(frozen=True)
class Mixture(Quantifier):
    """Pointwise convex combination ``sum alpha_i Q_i``. Build with :func:`mixture`."""

    components: tuple
    alphas: tuple

    def __post_init__(self):
        if len(self.components) != len(self.alphas):
            raise ValidationError(
                f"{len(self.components)} components but {len(self.alphas)} alphas"
            )
        if not self.components:
            raise ValidationError("mixture needs at least one component")
        for i, c in enumerate(self.components):
            if not isinstance(c, Quantifier):
                raise ValidationError(f"component {i} is not a Quantifier", path=f"components[{i}]")
        for i, a in enumerate(self.alphas):
            if not a >= 0:
                raise ValidationError(f"alpha must be nonnegative, got {a!r}", path=f"alphas[{i}]")
        if abs(math.fsum(self.alphas) - 1.0) > ALPHA_TOL:
            raise ValidationError(f"alphas must sum to 1, got {math.fsum(self.alphas)!r}")
        self._validate()

    def _eval(self, x):
        return math.fsum(a * c._eval(x) for a, c in zip(self.alphas, self.components) if a)

    def values(self, xs):
        xs = np.asarray(xs, dtype=float)
        out = np.zeros(xs.shape)
        for a, c in zip(self.alphas, self.components):
            if a:
                out = out + a * c.values(xs)
        return out

    def orness(self):
        return math.fsum(a * c.orness() for a, c in zip(self.alphas, self.components) if a)


def mixture(components: Sequence[Quantifier], alphas: Sequence[float]) -> Mixture:
    """Convex combination of RIM quantifiers (itself a RIM quantifier)."""
    return Mixture(tuple(components), tuple(float(a) for a in alphas))


class _Integrated(Quantifier):
    """Quantifier defined as ``K * integral_0^x density``.

    Points above 0.5 are evaluated as ``1 - K * integral_x^1 density`` so the
    upper tail keeps the same relative precision as the lower one.
    ``K`` is the reciprocal of the computed mass on ``[0, 1]``.
    """

    _scale: float = 1.0

    def _density(self, y: float) -> float:
        raise NotImplementedError

    def _normalize(self):
        mass = integrate(self._density, 0.0, 1.0, INNER_SPEC)
        if not mass > 0:
            raise ValidationError("density has no mass on [0, 1]")
        object.__setattr__(self, "_scale", 1.0 / mass)

    def _eval(self, x):
        if x <= 0.5:
            return min(self._scale * integrate(self._density, 0.0, x, INNER_SPEC), 1.0)
        return max(1.0 - self._scale * integrate(self._density, x, 1.0, INNER_SPEC), 0.0)

    def values(self, xs):
        # integrate between consecutive sorted points and accumulate, so a
        # grid of m points costs m short integrals instead of m long ones
        xs = np.asarray(xs, dtype=float)
        flat = xs.reshape(-1)
        if np.any(flat < 0) or np.any(flat > 1):
            raise DomainError("quantifier arguments must lie in [0, 1]")
        out = np.empty(flat.size)
        order = np.argsort(flat, kind="stable")
        low = [i for i in order if flat[i] <= 0.5]
        high = [i for i in order[::-1] if flat[i] > 0.5]
        acc, prev = 0.0, 0.0
        for idx in low:
            x = float(flat[idx])
            if x > prev:
                acc += integrate(self._density, prev, x, INNER_SPEC)
                prev = x
            out[idx] = min(self._scale * acc, 1.0)
        acc, prev = 0.0, 1.0
        for idx in high:
            x = float(flat[idx])
            if x < prev:
                acc += integrate(self._density, x, prev, INNER_SPEC)
                prev = x
            out[idx] = max(1.0 - self._scale * acc, 0.0)
        return out.reshape(xs.shape)

    def orness(self):
        return integrate(self._eval, 0.0, 1.0, ORNESS_SPEC)


@dataclass(frozen=True)
class GeneratingFunction:
    """A density ``f`` on ``[0, 1]``; ``Q(x) = integral_0^x f``.

    ``smooth`` records that ``f`` is differentiable, which the
    derivative-based dominance condition relies on.
    """

    func: Callable[[float], float]
    smooth: bool = True

    def __post_init__(self):
        xs = grid(VALIDATION_GRID)
        vals = np.array([self.func(float(x)) for x in xs])
        if not np.all(np.isfinite(vals)):
            raise ValidationError("generating function must be finite on [0, 1]")
        if np.any(vals < 0):
            raise ValidationError("generating function must be nonnegative on [0, 1]")
        mass = integrate(self.func, 0.0, 1.0, INNER_SPEC)
        if abs(mass - 1.0) > GENERATOR_MASS_TOL:
            raise ValidationError(f"generating function must integrate to 1, got {mass!r}")

    def __call__(self, x: float) -> float:
        return self.func(x)


@dataclass(frozen=True)
class FromGenerator(_Integrated):
    """``Q(x) = integral_0^x f(z) dz`` for a generating function ``f``.

    ``f`` integrates to one only up to quadrature accuracy; the computed mass
    is divided out so that ``Q(1) = 1`` holds exactly.
    """

    generator: GeneratingFunction
    _scale: float = field(init=False, repr=False, compare=False, default=1.0)

    def __post_init__(self):
        self._normalize()
        self._validate()

    def _density(self, y):
        return self.generator.func(y)


def from_generator(f: GeneratingFunction | Callable[[float], float]) -> FromGenerator:
    if not isinstance(f, GeneratingFunction):
        f = GeneratingFunction(f)
    return FromGenerator(f)


def reflect_generator(f: GeneratingFunction) -> GeneratingFunction:
    """``g(x) = f(1 - x)``; the reflected quantifier has complementary orness."""
    func = f.func
    return GeneratingFunction(lambda x: func(1.0 - x), smooth=f.smooth)


@dataclass(frozen=True)
class FromDensity(_Integrated):
    """``Q(x) = K * integral_0^x h`` for a positive density ``h`` on ``[0, 1]``.

    ``density`` is any object with a ``pdf(y)`` method; the elliptical module
    supplies :class:`~owakit.elliptical.UnitDensity`. ``K`` normalizes the
    mass on ``[0, 1]`` to one.
    """

    density: object
    _scale: float = field(init=False, repr=False, compare=False, default=1.0)

    def __post_init__(self):
        self._normalize()
        self._validate()

    def _density(self, y):
        return self.density.pdf(y)


def evaluate(q: Quantifier, x: float) -> float:
    """``Q(x)``; raises :class:`DomainError` outside ``[0, 1]``."""
    return q(x)


def quantifier_orness(q: Quantifier) -> float:
    """``orness(Q) = integral_0^1 Q(r) dr``.

    Closed form for the primitive shapes, adaptive quadrature otherwise.
    """
    return q.orness()


def dual_quantifier_orness(q: Quantifier) -> float:
    """Orness of the dual weights generated by ``q``: ``1 - integral Q``."""
    return 1.0 - quantifier_orness(q)


def orness_via_generator(f: GeneratingFunction) -> float:
    """``1 - integral_0^1 t f(t) dt``; no nested quadrature needed."""
    func = f.func if isinstance(f, GeneratingFunction) else f
    return 1.0 - integrate(lambda t: t * func(t), 0.0, 1.0, INNER_SPEC)


def discrete_orness(q: Quantifier, n: int) -> float:
    """``(1/(n-1)) * sum_{j<n} Q(j/n)``, which tends to ``orness(Q)`` as n grows."""
    if n < 2:
        raise ValidationError(f"need n >= 2, got {n}")
    vals = q.values(np.arange(1, n) / n)
    return math.fsum(vals) / (n - 1)


def dominates(q1: Quantifier, q2: Quantifier, gridsize: int = VALIDATION_GRID) -> bool:
    """True when ``q1(x) >= q2(x)`` (to 1e-12) at every ``x = k/gridsize``."""
    if gridsize < 2:
        raise ValidationError(f"gridsize must be >= 2, got {gridsize}")
    xs = grid(gridsize)
    return bool(np.all(q1.values(xs) >= q2.values(xs) - MONOTONE_TOL))


class Convexity(str, enum.Enum):
    CONVEX = "convex"
    CONCAVE = "concave"
    BOTH = "both"
    NEITHER = "neither"


def convexity_class(
    q: Quantifier, gridsize: int = VALIDATION_GRID, tol: float = 1e-10
) -> Convexity:
    """Classify ``q`` from its second differences on a uniform grid.

    Affine quantifiers (all second differences within ``tol`` of zero) are
    reported as ``BOTH``.
    """
    if gridsize < 3:
        raise ValidationError(f"gridsize must be >= 3, got {gridsize}")
    v = q.values(grid(gridsize))
    d2 = v[2:] + v[:-2] - 2.0 * v[1:-1]
    convex = bool(np.all(d2 >= -tol))
    concave = bool(np.all(d2 <= tol))
    if convex and concave:
        return Convexity.BOTH
    if convex:
        return Convexity.CONVEX
    if concave:
        return Convexity.CONCAVE
    return Convexity.NEITHER


def olympic_quantifier(n: int) -> TrimmedLinear:
    """Quantifier whose weights drop the best and worst of ``n`` arguments."""
    if n < 3:
        raise ValidationError(f"olympic aggregation needs n >= 3, got {n}")
    return TrimmedLinear(1.0 / n, (n - 1.0) / n)


def example_mixture(alphas: Sequence[float], n: int, k: int) -> Mixture:
    """Five-part mixture ``a1*Q_A + a2*all + a3*exists + a4*step + a5*olympic``.

    The step jumps at ``(n-k)/n``; the last component is
    :func:`olympic_quantifier`. Special cases give the mean, min, max, a
    single order statistic, and the olympic mean.
    """
    if not 1 <= k < n:
        raise ValidationError(f"need 1 <= k < n, got k={k}, n={n}")
    parts = (Identity(), All(), Exists(), ThresholdStep((n - k) / n), olympic_quantifier(n))
    return mixture(parts, alphas)
