"""Seeded random sensor deployments over a rectangular strip.

Two placement models:

* line-based: x uniform on [0, width], y normal around the strip axis
  with standard deviation ``line_sigma``;
* poisson: x and y both uniform over the strip (a binomial point process,
  the fixed-count view of a Poisson scatter).

Determinism contract: one ``numpy`` PCG64 generator seeded with
``spec.seed``; draws happen in a fixed order (all x, then all y, then all
directions when the sensors are directional). Campaign code derives one
child seed per (base seed, sweep index, realization, attempt) through
``child_seed``, which folds the parts with ``numpy.random.SeedSequence``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .model import ParameterError, Sensor, SensorField, SensorKind

RNG_ALGORITHM = "numpy-pcg64"


class DeploymentKind(str, Enum):
    LINE = "line"
    POISSON = "poisson"


def child_seed(*parts: int) -> int:
    """Fold non-negative integer parts into one 64-bit stream seed."""
    ss = np.random.SeedSequence([int(p) for p in parts])
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class DeploymentSpec:
    """Parameters of one random deployment."""

    n: int
    width: float
    strip_height: float = 10.0
    kind: DeploymentKind = DeploymentKind.LINE
    line_sigma: float = 10.0
    radius: float = 10.0
    fov: float = 90.0
    sensor_kind: SensorKind = SensorKind.DIRECTIONAL
    seed: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.kind, DeploymentKind):
            try:
                object.__setattr__(self, "kind", DeploymentKind(self.kind))
            except ValueError:
                raise ParameterError(
                    f"unknown deployment kind {self.kind!r}"
                ) from None
        if not isinstance(self.sensor_kind, SensorKind):
            try:
                object.__setattr__(
                    self, "sensor_kind", SensorKind(self.sensor_kind)
                )
            except ValueError:
                raise ParameterError(
                    f"unknown sensor kind {self.sensor_kind!r}"
                ) from None
        if self.n < 0:
            raise ParameterError(f"n must be >= 0, got {self.n}")
        if not self.width > 0:
            raise ParameterError(f"width must be > 0, got {self.width}")
        if self.strip_height < 0:
            raise ParameterError(f"strip_height must be >= 0, got {self.strip_height}")
        if self.line_sigma < 0:
            raise ParameterError(f"line_sigma must be >= 0, got {self.line_sigma}")
        if not self.radius > 0:
            raise ParameterError(f"radius must be > 0, got {self.radius}")
        if self.sensor_kind is SensorKind.DIRECTIONAL and (
            self.fov is None or not 0 < self.fov <= 360
        ):
            raise ParameterError(f"fov must be in (0, 360], got {self.fov}")
        if self.seed < 0:
            raise ParameterError(f"seed must be >= 0, got {self.seed}")

    def with_(self, **kwargs) -> "DeploymentSpec":
        return replace(self, **kwargs)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "width": self.width,
            "strip_height": self.strip_height,
            "kind": self.kind.value,
            "line_sigma": self.line_sigma,
            "radius": self.radius,
            "fov": self.fov,
            "sensor_kind": self.sensor_kind.value,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DeploymentSpec":
        known = {
            "n",
            "width",
            "strip_height",
            "kind",
            "line_sigma",
            "radius",
            "fov",
            "sensor_kind",
            "seed",
        }
        unknown = set(data) - known
        if unknown:
            raise ParameterError(f"unknown deployment fields: {sorted(unknown)}")
        fields = dict(data)
        if "kind" in fields:
            fields["kind"] = DeploymentKind(fields["kind"])
        if "sensor_kind" in fields:
            fields["sensor_kind"] = SensorKind(fields["sensor_kind"])
        return cls(**fields)


def generate(spec: DeploymentSpec) -> SensorField:
    """Deploy ``spec.n`` sensors; domain is [0, width]."""
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    xs = rng.uniform(0.0, spec.width, n)
    if spec.kind is DeploymentKind.LINE:
        ys = rng.normal(0.0, spec.line_sigma, n)
    else:
        ys = rng.uniform(0.0, spec.strip_height, n)
    sensors = []
    if spec.sensor_kind is SensorKind.DIRECTIONAL:
        dirs = rng.uniform(0.0, 360.0, n)
        for i in range(n):
            sensors.append(
                Sensor.directional(
                    i, float(xs[i]), float(ys[i]), spec.radius, spec.fov, float(dirs[i])
                )
            )
    else:
        for i in range(n):
            sensors.append(Sensor.omni(i, float(xs[i]), float(ys[i]), spec.radius))
    return SensorField.build(sensors, (0.0, spec.width))
