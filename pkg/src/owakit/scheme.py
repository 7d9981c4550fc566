"""Weighting-scheme descriptions as read from YAML (or JSON) scheme files.

A scheme file is a mapping with a ``kind`` and the fields that kind needs::

    kind: dual-wowa
    quantifier:
      kind: mixture
      components:
        - {kind: identity}
        - {kind: power, r: 2}
      alphas: [0.5, 0.5]
    p: [0.1, 0.2, 0.3, 0.4]

Validation errors carry the dotted path of the offending field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import yaml

from .core import WeightVector, owa_aggregate
from .elliptical import (
    DensityGenerator,
    UnitDensity,
    argument_weights,
    position_weights,
    quantifier_from_density,
    weighted_mean,
)
from .errors import DimensionError, ValidationError
from .quantifier import (
    All,
    Exists,
    Identity,
    Power,
    Quantifier,
    ThresholdStep,
    TrimmedLinear,
    mixture,
    olympic_quantifier,
)
from .weightgen import (
    ProbabilityVector,
    dual_weights_from_quantifier,
    dual_wowa_weights,
    weights_from_quantifier,
    wowa_weights,
)

SCHEME_KINDS = (
    "quantifier",
    "dual-quantifier",
    "wowa",
    "dual-wowa",
    "elliptical-position",
    "elliptical-argument",
    "explicit",
)
DEFAULT_DENSITY_SCALE = 0.2

_REQUIRED = {
    "quantifier": {"quantifier"},
    "dual-quantifier": {"quantifier"},
    "wowa": {"quantifier", "p"},
    "dual-wowa": {"quantifier", "p"},
    "elliptical-position": {"generator"},
    "elliptical-argument": {"generator"},
    "explicit": {"weights"},
}
_OPTIONAL = {"n"}


def _join(path, key):
    return f"{path}.{key}" if path else str(key)


def _mapping(desc, path) -> dict:
    if not isinstance(desc, dict):
        raise ValidationError(f"expected a mapping, got {type(desc).__name__}", path=path or None)
    return desc


def _number(desc, key, path, integer=False):
    if key not in desc:
        raise ValidationError("missing required field", path=_join(path, key))
    v = desc[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValidationError(f"expected a number, got {v!r}", path=_join(path, key))
    if integer and int(v) != v:
        raise ValidationError(f"expected an integer, got {v!r}", path=_join(path, key))
    return int(v) if integer else float(v)


def _numbers(desc, key, path) -> list[float]:
    if key not in desc:
        raise ValidationError("missing required field", path=_join(path, key))
    v = desc[key]
    if not isinstance(v, list) or not v:
        raise ValidationError("expected a non-empty list of numbers", path=_join(path, key))
    out = []
    for i, x in enumerate(v):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ValidationError(f"expected a number, got {x!r}", path=f"{_join(path, key)}[{i}]")
        out.append(float(x))
    return out


def _reject_extra(desc, allowed, path):
    extra = set(desc) - set(allowed)
    if extra:
        key = sorted(extra)[0]
        raise ValidationError("unexpected field", path=_join(path, key))


def parse_generator(desc: Any, path: str = "generator") -> DensityGenerator:
    desc = _mapping(desc, path)
    family = desc.get("family")
    if family is None:
        raise ValidationError("missing required field", path=_join(path, "family"))
    _reject_extra(desc, {"family", "r", "s", "m"}, path)
    kwargs = {}
    for key in ("r", "s"):
        if key in desc:
            kwargs[key] = _number(desc, key, path)
    if "m" in desc:
        kwargs["m"] = _number(desc, "m", path, integer=True)
    try:
        return DensityGenerator(family, **kwargs)
    except ValidationError as exc:
        raise ValidationError(str(exc), path=path) from None


def parse_quantifier(desc: Any, path: str = "quantifier") -> Quantifier:
    desc = _mapping(desc, path)
    kind = desc.get("kind")
    try:
        if kind == "identity":
            _reject_extra(desc, {"kind"}, path)
            return Identity()
        if kind == "all":
            _reject_extra(desc, {"kind"}, path)
            return All()
        if kind == "exists":
            _reject_extra(desc, {"kind"}, path)
            return Exists()
        if kind == "threshold":
            _reject_extra(desc, {"kind", "t"}, path)
            return ThresholdStep(_number(desc, "t", path))
        if kind == "trimmed-linear":
            _reject_extra(desc, {"kind", "lo", "hi"}, path)
            return TrimmedLinear(_number(desc, "lo", path), _number(desc, "hi", path))
        if kind == "olympic":
            _reject_extra(desc, {"kind", "n"}, path)
            return olympic_quantifier(_number(desc, "n", path, integer=True))
        if kind == "power":
            _reject_extra(desc, {"kind", "r"}, path)
            return Power(_number(desc, "r", path))
        if kind == "mixture":
            _reject_extra(desc, {"kind", "components", "alphas"}, path)
            comps = desc.get("components")
            if not isinstance(comps, list) or not comps:
                raise ValidationError(
                    "expected a non-empty list of quantifiers", path=_join(path, "components")
                )
            parts = [
                parse_quantifier(c, f"{_join(path, 'components')}[{i}]") for i, c in enumerate(comps)
            ]
            return mixture(parts, _numbers(desc, "alphas", path))
        if kind == "density":
            _reject_extra(desc, {"kind", "generator", "scale"}, path)
            scale = _number(desc, "scale", path) if "scale" in desc else DEFAULT_DENSITY_SCALE
            g = parse_generator(desc.get("generator"), _join(path, "generator"))
            return quantifier_from_density(UnitDensity(g, scale))
    except ValidationError as exc:
        if exc.path:
            raise
        raise ValidationError(str(exc), path=path) from None
    if kind is None:
        raise ValidationError("missing required field", path=_join(path, "kind"))
    raise ValidationError(f"unknown quantifier kind {kind!r}", path=_join(path, "kind"))


@dataclass(frozen=True)
class SchemeSpec:
    """A validated weighting scheme.

    Position-based kinds produce one weight vector per dimension ``n``;
    ``elliptical-argument`` computes weights from each row's own values.
    """

    kind: str
    raw: dict
    quantifier: Quantifier | None = None
    generator: DensityGenerator | None = None
    p: ProbabilityVector | None = None
    weights: WeightVector | None = None
    n: int | None = None

    @property
    def position_based(self) -> bool:
        return self.kind != "elliptical-argument"

    @property
    def fixed_n(self) -> int | None:
        """Dimension implied by the scheme itself, if any."""
        if self.p is not None:
            return len(self.p)
        if self.weights is not None:
            return len(self.weights)
        return self.n

    def weight_vector(self, n: int | None = None) -> WeightVector:
        if not self.position_based:
            raise ValidationError(
                "elliptical-argument weights require data; use the aggregate command", path="kind"
            )
        fixed = self.fixed_n
        if n is None:
            n = fixed
        if n is None:
            raise ValidationError("dimension n is required for this scheme", path="n")
        if fixed is not None and n != fixed:
            raise DimensionError(f"scheme has dimension {fixed} but n={n} was requested")
        if self.kind == "quantifier":
            return weights_from_quantifier(self.quantifier, n)
        if self.kind == "dual-quantifier":
            return dual_weights_from_quantifier(self.quantifier, n)
        if self.kind == "wowa":
            return wowa_weights(self.quantifier, self.p)
        if self.kind == "dual-wowa":
            return dual_wowa_weights(self.quantifier, self.p)
        if self.kind == "elliptical-position":
            return position_weights(self.generator, n)
        return self.weights

    def row_weights(self, row) -> WeightVector:
        if self.position_based:
            return self.weight_vector(len(row))
        return argument_weights(self.generator, row)

    def aggregate(self, row, w: WeightVector | None = None) -> float:
        if w is None:
            w = self.row_weights(row)
        if self.position_based:
            return owa_aggregate(row, w)
        return weighted_mean(row, w)


def parse_scheme(desc: Any) -> SchemeSpec:
    desc = _mapping(desc, "")
    kind = desc.get("kind")
    if kind is None:
        raise ValidationError("missing required field", path="kind")
    if kind not in SCHEME_KINDS:
        raise ValidationError(f"unknown scheme kind {kind!r}; expected one of {SCHEME_KINDS}", path="kind")
    required = _REQUIRED[kind]
    for key in sorted(required):
        if key not in desc:
            raise ValidationError("missing required field", path=key)
    _reject_extra(desc, required | _OPTIONAL | {"kind"}, "")

    fields: dict[str, Any] = {}
    if "quantifier" in required:
        fields["quantifier"] = parse_quantifier(desc["quantifier"])
    if "generator" in required:
        fields["generator"] = parse_generator(desc["generator"])
    if "p" in required:
        try:
            fields["p"] = ProbabilityVector(_numbers(desc, "p", ""))
        except ValidationError as exc:
            raise ValidationError(str(exc), path=exc.path or "p") from None
    if "weights" in required:
        try:
            fields["weights"] = WeightVector(_numbers(desc, "weights", ""))
        except ValidationError as exc:
            raise ValidationError(str(exc), path=exc.path or "weights") from None
    if "n" in desc:
        n = _number(desc, "n", "", integer=True)
        if n < 1:
            raise ValidationError(f"n must be >= 1, got {n}", path="n")
        fields["n"] = n
    spec = SchemeSpec(kind=kind, raw=desc, **fields)
    fixed = spec.p if spec.p is not None else spec.weights
    if fixed is not None and spec.n is not None and len(fixed) != spec.n:
        raise DimensionError(f"scheme declares n={spec.n} but its vector has length {len(fixed)}")
    return spec


def load_scheme(path) -> SchemeSpec:
    with open(path, encoding="utf-8") as fh:
        try:
            desc = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ValidationError(f"cannot parse scheme file {path}: {exc}") from None
    return parse_scheme(desc)
