"""Length values with a unit suffix, e.g. ``6ft`` or ``2.5in``.

Labels are carried through unchanged. Conversion is only used where two
different labels must be combined (edge length in feet, fittings in inches).
"""

from __future__ import annotations

import re

_LENGTH_RE = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([A-Za-z]*)\s*$")

# inches per unit
_INCHES = {
    "in": 1.0,
    "inch": 1.0,
    "inches": 1.0,
    "ft": 12.0,
    "foot": 12.0,
    "feet": 12.0,
    "yd": 36.0,
    "mm": 1.0 / 25.4,
    "cm": 10.0 / 25.4,
    "m": 1000.0 / 25.4,
}


class UnitError(ValueError):
    pass


def parse_length(text: str) -> tuple[float, str]:
    """Split ``"6ft"`` into ``(6.0, "ft")``; a bare number has label ``""``."""
    m = _LENGTH_RE.match(text)
    if not m:
        raise UnitError(f"cannot read length {text!r}; expected a number with optional unit, like 6ft")
    return float(m.group(1)), m.group(2)


def convert(value: float, from_unit: str, to_unit: str) -> float:
    if from_unit == to_unit:
        return value
    try:
        return value * _INCHES[from_unit.lower()] / _INCHES[to_unit.lower()]
    except KeyError:
        raise UnitError(f"cannot combine lengths in {from_unit or 'bare units'!r} and {to_unit!r}") from None
