"""Hub and elbow fittings, the built-in catalog, and the catalog JSON format.

A catalog document looks like::

    {"hubs": [{"name": "true-wye", "arm_count": 3, "arm_axis_angle_deg": 90,
               "arm_length": 2.5, "socket_depth": 0}],
     "elbows": [{"name": "elbow-22.5", "bend_angle_deg": 22.5,
                 "takeoff": 0, "socket_depth": 0}]}

Angles are degrees in the document and radians in memory. Lengths carry
whatever unit the user works in; nothing is converted.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field

from .errors import CatalogError, EmptyCatalogError

DEFAULT_ARM_LENGTH = 2.5

_HUB_KEYS = {"name", "arm_count", "arm_axis_angle_deg", "arm_length", "socket_depth"}
_ELBOW_KEYS = {"name", "bend_angle_deg", "takeoff", "socket_depth"}


@dataclass(frozen=True)
class HubFitting:
    """Multi-arm connector.

    ``alpha`` is the angle between each arm and the hub's symmetry axis, so
    planar hubs (true wye, four-way plus) have alpha = pi/2. ``arm_length``
    runs from the hub centre to the elbow centre.
    """

    name: str
    arm_count: int
    alpha: float
    arm_length: float = DEFAULT_ARM_LENGTH
    socket_depth: float = 0.0

    def __post_init__(self):
        if self.arm_count < 3:
            raise CatalogError(f"hub {self.name!r}: arm_count must be >= 3, got {self.arm_count}")
        if not 0.0 < self.alpha <= math.pi / 2:
            raise CatalogError(
                f"hub {self.name!r}: arm axis angle must be in (0, 90] degrees, "
                f"got {math.degrees(self.alpha):g}"
            )
        if not self.arm_length > 0:
            raise CatalogError(f"hub {self.name!r}: arm_length must be positive")
        if self.socket_depth < 0:
            raise CatalogError(f"hub {self.name!r}: socket_depth must be >= 0")

    @property
    def is_planar(self) -> bool:
        return self.alpha == math.pi / 2

    def with_arm_length(self, arm_length: float) -> HubFitting:
        return HubFitting(self.name, self.arm_count, self.alpha, arm_length, self.socket_depth)


@dataclass(frozen=True)
class ElbowFitting:
    """Two-socket fitting that turns the pipe axis by ``bend_angle``."""

    name: str
    bend_angle: float
    takeoff: float = 0.0
    socket_depth: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.bend_angle < math.pi:
            raise CatalogError(
                f"elbow {self.name!r}: bend angle must be in [0, 180) degrees, "
                f"got {math.degrees(self.bend_angle):g}"
            )
        if self.takeoff < 0:
            raise CatalogError(f"elbow {self.name!r}: takeoff must be >= 0")
        if self.socket_depth < 0:
            raise CatalogError(f"elbow {self.name!r}: socket_depth must be >= 0")


@dataclass(frozen=True)
class Catalog:
    hubs: tuple[HubFitting, ...] = field(default_factory=tuple)
    elbows: tuple[ElbowFitting, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "hubs", tuple(self.hubs))
        object.__setattr__(self, "elbows", tuple(self.elbows))
        for kind, items in (("hub", self.hubs), ("elbow", self.elbows)):
            names = set()
            for item in items:
                if item.name in names:
                    raise CatalogError(f"duplicate {kind} name {item.name!r}")
                names.add(item.name)

    def hub(self, name: str) -> HubFitting:
        for h in self.hubs:
            if h.name == name:
                return h
        raise CatalogError(f"no hub named {name!r}; known hubs: {', '.join(h.name for h in self.hubs)}")

    def elbow(self, name: str) -> ElbowFitting:
        for e in self.elbows:
            if e.name == name:
                return e
        known = ", ".join(e.name for e in self.elbows)
        raise CatalogError(f"no elbow named {name!r}; known elbows: {known}")

    def hubs_for(self, q: int) -> list[HubFitting]:
        return [h for h in self.hubs if h.arm_count == q]

    def require_elbows(self) -> tuple[ElbowFitting, ...]:
        if not self.elbows:
            raise EmptyCatalogError("catalog has no elbows")
        return self.elbows


def standard_catalog() -> Catalog:
    """Common PVC fittings: three planar hubs, the cube corner, four trade elbows."""
    planar = math.pi / 2
    return Catalog(
        hubs=(
            HubFitting("true-wye", 3, planar),
            HubFitting("four-way-plus", 4, planar),
            HubFitting("five-way-planar", 5, planar),
            HubFitting("cube-corner", 3, math.acos(1.0 / math.sqrt(3.0))),
        ),
        elbows=tuple(
            ElbowFitting(f"elbow-{deg:g}", math.radians(deg)) for deg in (11.25, 22.5, 45.0, 90.0)
        ),
    )


def _reject_constant(token):
    raise CatalogError(f"non-finite number {token} in catalog")


def _number(entry: dict, key: str, who: str, default=None) -> float:
    if key not in entry:
        if default is None:
            raise CatalogError(f"{who}: missing required field {key!r}")
        return default
    value = entry[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CatalogError(f"{who}: field {key!r} must be a number")
    if not math.isfinite(value):
        raise CatalogError(f"{who}: field {key!r} must be finite")
    return float(value)


def _entry_name(entry, kind: str, index: int) -> str:
    if not isinstance(entry, dict):
        raise CatalogError(f"{kind} #{index} must be an object")
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        raise CatalogError(f"{kind} #{index}: 'name' must be a non-empty string")
    return name


def _parse_hub(entry, index: int) -> HubFitting:
    name = _entry_name(entry, "hub", index)
    who = f"hub {name!r}"
    unknown = set(entry) - _HUB_KEYS
    if unknown:
        raise CatalogError(f"{who}: unknown keys {sorted(unknown)}")
    count = entry.get("arm_count")
    if isinstance(count, bool) or not isinstance(count, int):
        raise CatalogError(f"{who}: 'arm_count' must be an integer")
    alpha_deg = _number(entry, "arm_axis_angle_deg", who)
    if not 0.0 < alpha_deg <= 90.0:
        raise CatalogError(f"{who}: arm_axis_angle_deg must be in (0, 90], got {alpha_deg:g}")
    return HubFitting(
        name,
        count,
        math.radians(alpha_deg),
        _number(entry, "arm_length", who, DEFAULT_ARM_LENGTH),
        _number(entry, "socket_depth", who, 0.0),
    )


def _parse_elbow(entry, index: int) -> ElbowFitting:
    name = _entry_name(entry, "elbow", index)
    who = f"elbow {name!r}"
    unknown = set(entry) - _ELBOW_KEYS
    if unknown:
        raise CatalogError(f"{who}: unknown keys {sorted(unknown)}")
    return ElbowFitting(
        name,
        math.radians(_number(entry, "bend_angle_deg", who)),
        _number(entry, "takeoff", who, 0.0),
        _number(entry, "socket_depth", who, 0.0),
    )


def load_catalog(source) -> Catalog:
    """Parse a catalog document.

    ``source`` may be a binary or text stream, ``bytes`` or ``str``.

    Raises:
        CatalogError: malformed JSON, unknown keys, bad values, duplicate
            names, or an empty elbow list. The message names the entry.
    """
    if isinstance(source, (bytes, bytearray)):
        source = io.BytesIO(source)
    elif isinstance(source, str):
        source = io.StringIO(source)
    try:
        doc = json.load(source, parse_constant=_reject_constant)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CatalogError(f"malformed catalog document: {exc}") from exc
    if not isinstance(doc, dict):
        raise CatalogError("catalog document must be a JSON object")
    unknown = set(doc) - {"hubs", "elbows"}
    if unknown:
        raise CatalogError(f"catalog: unknown keys {sorted(unknown)}")
    hubs = doc.get("hubs", [])
    elbows = doc.get("elbows", [])
    if not isinstance(hubs, list) or not isinstance(elbows, list):
        raise CatalogError("catalog: 'hubs' and 'elbows' must be arrays")
    catalog = Catalog(
        hubs=tuple(_parse_hub(h, i) for i, h in enumerate(hubs)),
        elbows=tuple(_parse_elbow(e, i) for i, e in enumerate(elbows)),
    )
    catalog.require_elbows()
    return catalog


def catalog_to_dict(catalog: Catalog) -> dict:
    return {
        "hubs": [
            {
                "name": h.name,
                "arm_count": h.arm_count,
                "arm_axis_angle_deg": math.degrees(h.alpha),
                "arm_length": h.arm_length,
                "socket_depth": h.socket_depth,
            }
            for h in catalog.hubs
        ],
        "elbows": [
            {
                "name": e.name,
                "bend_angle_deg": math.degrees(e.bend_angle),
                "takeoff": e.takeoff,
                "socket_depth": e.socket_depth,
            }
            for e in catalog.elbows
        ],
    }


def dump_catalog(catalog: Catalog) -> str:
    return json.dumps(catalog_to_dict(catalog), indent=2) + "\n"
