"""Adaptive Simpson quadrature.

Used for quantifier integrals (orness, generator- and density-derived
quantifiers). Integrands are expected to be smooth on the interval; step
quantifiers never reach this path.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, ValidationError


@dataclass(frozen=True)
class QuadratureSpec:
    """Absolute tolerance and subdivision depth cap for :func:`integrate`."""

    tolerance: float = 1e-8
    max_depth: int = 30

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValidationError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_depth < 1:
            raise ValidationError(f"max_depth must be >= 1, got {self.max_depth}")


DEFAULT_SPEC = QuadratureSpec()
MIN_DEPTH = 3


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """Integrate ``f`` over ``[a, b]`` with adaptive Simpson's rule.

    Each panel is accepted once the difference between the one- and two-panel
    Simpson estimates is below ``15 * tol`` for that panel's share of the
    tolerance; accepted panels get the Richardson correction.

    Raises:
        DomainError: if ``a > b``.
        ConvergenceError: if some panel still fails the test at
            ``spec.max_depth``. The exception carries the full estimate
            (unconverged panels included) and the summed error bound.
    """
    if a > b:
        raise DomainError(f"integration bounds reversed: a={a} > b={b}")
    if a == b:
        return 0.0

    fa, fm, fb = f(a), f((a + b) / 2.0), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    total = 0.0
    err_bound = 0.0
    exhausted = False
    # explicit stack keeps deep subdivisions off the Python call stack
    stack = [(a, b, fa, fm, fb, whole, spec.tolerance, 0)]
    while stack:
        lo, hi, flo, fmid, fhi, s, tol, depth = stack.pop()
        mid = (lo + hi) / 2.0
        lm = (lo + mid) / 2.0
        rm = (mid + hi) / 2.0
        flm = f(lm)
        frm = f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - s
        # a coarse panel can agree with its halves by accident; always
        # subdivide a few times before trusting the error estimate
        if depth >= min(MIN_DEPTH, spec.max_depth - 1) and abs(delta) <= 15.0 * tol:
            total += left + right + delta / 15.0
            err_bound += abs(delta) / 15.0
        elif depth + 1 >= spec.max_depth or mid in (lo, hi):
            exhausted = True
            total += left + right + delta / 15.0
            err_bound += abs(delta) / 15.0
        else:
            stack.append((mid, hi, fmid, frm, fhi, right, tol / 2.0, depth + 1))
            stack.append((lo, mid, flo, flm, fmid, left, tol / 2.0, depth + 1))

    if exhausted:
        raise ConvergenceError(
            f"adaptive Simpson did not converge on [{a}, {b}] within depth "
            f"{spec.max_depth} (error bound {err_bound:.3g})",
            estimate=total,
            error_bound=err_bound,
        )
    return total
