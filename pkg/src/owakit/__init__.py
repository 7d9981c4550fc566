"""Ordered weighted averaging with quantifier- and elliptical-density-based weights."""

from .core import (
    ArgumentVector,
    WeightVector,
    andness,
    dispersion,
    dual,
    orness,
    owa_aggregate,
)
from .elliptical import (
    DensityGenerator,
    UnitDensity,
    argument_weights,
    gaussian_argument_weights,
    is_centered,
    position_stats,
    position_weights,
    quantifier_from_density,
)
from .errors import ConvergenceError, DimensionError, DomainError, OWAError, ValidationError
from .numerics import QuadratureSpec, integrate
from .quantifier import (
    All,
    Exists,
    GeneratingFunction,
    Identity,
    Power,
    Quantifier,
    ThresholdStep,
    TrimmedLinear,
    convexity_class,
    dominates,
    dual_quantifier_orness,
    from_generator,
    mixture,
    orness_via_generator,
    quantifier_orness,
    reflect_generator,
)
from .weightgen import (
    ProbabilityVector,
    dual_weights_from_quantifier,
    dual_wowa_aggregate,
    dual_wowa_weights,
    weights_from_quantifier,
    wowa_weights,
)

__version__ = "0.1.0"
