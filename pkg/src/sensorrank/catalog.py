"""Synthetic sensor catalog: generation, persistence, matrix assembly.

Catalogs stand in for a live device registry. Each sensor carries six
rankable fields plus location metadata; the canonical optimization
direction of each rankable field is fixed (``CRITERION_DIRECTIONS``), so
"battery" is always maximized and "price" always minimized, regardless of
which subset of criteria a run selects.

Generation is reproducible: fields are drawn independently and uniformly
with numpy's PCG64 generator (``numpy.random.default_rng``), seeded by
``CatalogSpec.seed``, one full column per field in the fixed order
battery, price, drift, frequency, energy_consumption, response_time,
latitude, longitude. The same spec therefore always yields a
bit-identical catalog.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields as dataclass_fields
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import CriterionSpec, DecisionMatrix, Direction, build_matrix

RANKING_FIELDS = (
    "battery",
    "price",
    "drift",
    "frequency",
    "energy_consumption",
    "response_time",
)

CRITERION_DIRECTIONS = {
    "battery": Direction.MAXIMIZE,
    "price": Direction.MINIMIZE,
    "drift": Direction.MINIMIZE,
    "frequency": Direction.MAXIMIZE,
    "energy_consumption": Direction.MINIMIZE,
    "response_time": Direction.MINIMIZE,
}

NUMERIC_FIELDS = RANKING_FIELDS + ("latitude", "longitude")

# Hard validity bounds per field: (low, high, low_inclusive).
_LEGAL_BOUNDS = {
    "battery": (0.0, 100.0, True),
    "price": (0.0, math.inf, False),
    "drift": (0.0, math.inf, True),
    "frequency": (0.0, math.inf, False),
    "energy_consumption": (0.0, math.inf, False),
    "response_time": (0.0, math.inf, False),
    "latitude": (-90.0, 90.0, True),
    "longitude": (-180.0, 180.0, True),
}

DEFAULT_RANGES: dict[str, tuple[float, float]] = {
    "battery": (0.0, 100.0),
    "price": (10.0, 500.0),
    "drift": (0.01, 5.0),
    "frequency": (0.1, 10.0),
    "energy_consumption": (0.1, 5.0),
    "response_time": (1.0, 1000.0),
    "latitude": (-90.0, 90.0),
    "longitude": (-180.0, 180.0),
}

FORMAT_NAME = "sensor-catalog"
SCHEMA_VERSION = 1


def _check_field_value(field: str, value: float) -> float:
    value = float(value)
    low, high, low_inclusive = _LEGAL_BOUNDS[field]
    ok = np.isfinite(value) and value <= high
    ok = ok and (value >= low if low_inclusive else value > low)
    if not ok:
        raise ValueError(f"{field}={value!r} is out of range")
    return value


@dataclass(frozen=True)
class SensorDescription:
    """One smart-object description with its rankable capabilities."""

    id: str
    battery: float
    price: float
    drift: float
    frequency: float
    energy_consumption: float
    response_time: float
    latitude: float
    longitude: float

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("sensor id must be non-empty")
        for field in NUMERIC_FIELDS:
            object.__setattr__(self, field, _check_field_value(field, getattr(self, field)))


SENSOR_FIELD_NAMES = tuple(f.name for f in dataclass_fields(SensorDescription))


@dataclass(frozen=True)
class CatalogSpec:
    """Size, seed and per-field uniform ranges of a synthetic catalog."""

    count: int
    seed: int
    ranges: Mapping[str, tuple[float, float]] | None = None

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        merged = dict(DEFAULT_RANGES)
        for field, bounds in (self.ranges or {}).items():
            if field not in DEFAULT_RANGES:
                raise ValueError(f"unknown catalog field {field!r}")
            low, high = (float(bounds[0]), float(bounds[1]))
            merged[field] = (low, high)
        for field, (low, high) in merged.items():
            if not low < high:
                raise ValueError(f"{field}: range low must be below high")
            legal_low, legal_high, low_inclusive = _LEGAL_BOUNDS[field]
            low_ok = low >= legal_low if low_inclusive else low > legal_low
            if not (low_ok and high <= legal_high):
                raise ValueError(f"{field}: range ({low}, {high}) outside legal bounds")
        object.__setattr__(self, "ranges", merged)


def generate_catalog(spec: CatalogSpec) -> list[SensorDescription]:
    """Draw a reproducible synthetic catalog.

    One uniform column per numeric field, drawn in the documented field
    order from a PCG64 stream seeded with ``spec.seed``; identifiers are
    ``s000000``, ``s000001``, ... in draw order.
    """
    rng = np.random.default_rng(spec.seed)
    columns = {
        field: rng.uniform(*spec.ranges[field], spec.count) for field in NUMERIC_FIELDS
    }
    return [
        SensorDescription(
            id=f"s{i:06d}",
            **{field: columns[field][i] for field in NUMERIC_FIELDS},
        )
        for i in range(spec.count)
    ]


def _canonical_criterion(item: str | CriterionSpec, default_weight: float) -> CriterionSpec:
    if isinstance(item, CriterionSpec):
        expected = CRITERION_DIRECTIONS.get(item.name)
        if expected is None:
            raise ValueError(f"unknown criterion {item.name!r}")
        if item.direction is not expected:
            raise ValueError(
                f"criterion {item.name!r} must be {expected.value}imized"
            )
        return item
    if item not in CRITERION_DIRECTIONS:
        raise ValueError(f"unknown criterion {item!r}")
    return CriterionSpec(name=item, direction=CRITERION_DIRECTIONS[item], weight=default_weight)


def catalog_to_matrix(
    sensors: Sequence[SensorDescription],
    criteria: Sequence[str | CriterionSpec],
) -> DecisionMatrix:
    """Assemble a decision matrix from a catalog, one row per sensor.

    ``criteria`` selects 2 to 6 of the rankable fields, by name or as
    full specs; directions are pinned to the canonical ones. Sensor order
    is preserved.
    """
    if not 2 <= len(criteria) <= 6:
        raise ValueError(f"need between 2 and 6 criteria, got {len(criteria)}")
    specs = [_canonical_criterion(c, 1.0 / len(criteria)) for c in criteria]
    values = np.array(
        [[getattr(s, spec.name) for spec in specs] for s in sensors]
    )
    return build_matrix([s.id for s in sensors], specs, values)


def save_catalog(sensors: Iterable[SensorDescription], path: str) -> None:
    """Write a catalog as line-delimited JSON records under a header line."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps({"format": FORMAT_NAME, "version": SCHEMA_VERSION}) + "\n")
        for sensor in sensors:
            record = {name: getattr(sensor, name) for name in SENSOR_FIELD_NAMES}
            fh.write(json.dumps(record) + "\n")


def load_catalog(path: str) -> list[SensorDescription]:
    """Read a catalog file back; the inverse of :func:`save_catalog`.

    Errors name the offending 1-based line: malformed JSON, wrong or
    missing keys, or field values outside their legal ranges. An empty
    catalog is rejected.
    """
    sensors: list[SensorDescription] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                raise ValueError(f"line {lineno}: blank line in catalog file")
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {lineno}: malformed record ({exc.msg})") from exc
            if not isinstance(record, dict):
                raise ValueError(f"line {lineno}: expected an object")
            if lineno == 1:
                if record.get("format") != FORMAT_NAME or record.get("version") != SCHEMA_VERSION:
                    raise ValueError(
                        f"line 1: expected {FORMAT_NAME} v{SCHEMA_VERSION} header"
                    )
                continue
            if set(record) != set(SENSOR_FIELD_NAMES):
                raise ValueError(f"line {lineno}: keys do not match the sensor schema")
            try:
                sensors.append(SensorDescription(**record))
            except (TypeError, ValueError) as exc:
                raise ValueError(f"line {lineno}: {exc}") from exc
    if not sensors:
        raise ValueError("catalog file contains no sensors")
    return sensors
