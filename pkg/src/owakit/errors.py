"""Exception types raised across the package."""


class OWAError(Exception):
    """Base class for all package errors."""


class ValidationError(OWAError, ValueError):
    """A value violates the invariants of the type being constructed.

    ``path`` locates the offending field when the value came from a nested
    description (for example a scheme file), e.g. ``quantifier.alphas[1]``.
    """

    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class DimensionError(OWAError, ValueError):
    """Vectors that must share a length do not."""


class DomainError(OWAError, ValueError):
    """An argument lies outside the domain of a function."""


class ConvergenceError(OWAError, ArithmeticError):
    """Adaptive quadrature ran out of subdivision depth.

    Carries the best available estimate and the accumulated error bound so
    callers can decide whether the result is still usable.
    """

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
