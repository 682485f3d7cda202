"""Rendering: JSON records, plain-text reports, and OBJ wireframes.

JSON uses snake_case keys, angles in degrees (keys ending ``_deg``),
sorted keys and full float precision. Text reports print angles to two
decimals and lengths to three.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, is_dataclass
from functools import singledispatch

import numpy as np

from .asbuilt import AsBuiltReport, FlexSolution
from .geometry import Polyhedron, PolyhedronMetrics, VertexFigure
from .joint import ElbowChoice, JointSolution
from .sizing import BillOfMaterials, SizeReport

_DEG_KEYS = {
    "dihedral_angle": "dihedral_angle_deg",
    "gamma": "face_angle_deg",
    "beta": "edge_axis_angle_deg",
    "orientation_gap": "orientation_gap_deg",
    "per_corner_angle": "per_corner_angle_deg",
    "realized_face_angle": "realized_face_angle_deg",
    "face_angle_error": "face_angle_error_deg",
    "max_orientation_gap": "max_orientation_gap_deg",
    "mean_orientation_gap": "mean_orientation_gap_deg",
}


def _degrees_by_key(d: dict) -> dict:
    out = {}
    for k, v in d.items():
        if k in _DEG_KEYS and v is not None:
            out[_DEG_KEYS[k]] = math.degrees(v)
        else:
            out[k] = v
    return out


@singledispatch
def to_record(obj) -> dict:
    if isinstance(obj, dict):
        return dict(obj)
    if is_dataclass(obj):
        return _degrees_by_key(asdict(obj))
    raise TypeError(f"cannot render {type(obj).__name__}")


@to_record.register
def _(obj: JointSolution) -> dict:
    return {
        "required_bend_deg": math.degrees(obj.delta),
        "vertex_offset": obj.h,
        "edge_extension": obj.e,
        "edge_axis_angle_deg": math.degrees(obj.beta),
        "arm_axis_angle_deg": math.degrees(obj.alpha),
        "arm_length": obj.arm_length,
    }


@to_record.register
def _(obj: ElbowChoice) -> dict:
    rec = {
        "chosen_elbow": obj.elbow.name,
        "chosen_bend_deg": math.degrees(obj.elbow.bend_angle),
        "bend_error_deg": math.degrees(obj.error),
    }
    if obj.face_angle_realized is not None:
        rec["realized_face_angle_deg"] = math.degrees(obj.face_angle_realized)
        rec["face_angle_error_deg"] = math.degrees(obj.face_angle_error)
    return rec


@to_record.register
def _(obj: VertexFigure) -> dict:
    return {"q": obj.q, "face_angle_deg": math.degrees(obj.gamma), "edge_axis_angle_deg": math.degrees(obj.beta)}


@to_record.register
def _(obj: AsBuiltReport) -> dict:
    rec = _degrees_by_key({k: v for k, v in asdict(obj).items() if k != "faces"})
    rec["faces"] = [to_record(f) for f in obj.faces]
    return rec


@to_record.register
def _(obj: FlexSolution) -> dict:
    rec = asdict(obj)
    rec["per_joint_flex_deg"] = [math.degrees(v) for v in rec.pop("per_joint_flex")]
    rec["lambda"] = rec.pop("lam")
    return rec


def render_json(report, **extra) -> str:
    """Serialize a report (dataclass or dict) plus ``extra`` keys as sorted JSON."""
    rec = to_record(report)
    rec.update(extra)
    return json.dumps(rec, sort_keys=True, indent=2) + "\n"


def _fmt_len(value: float, unit: str) -> str:
    # round first so -1e-16 prints as 0.000, not -0.000
    return f"{round(value, 3) + 0.0:.3f} {unit}".rstrip()


def _fmt_deg(rad: float, signed: bool = False) -> str:
    deg = round(math.degrees(rad), 2) + 0.0
    return f"{deg:+.2f} deg" if signed else f"{deg:.2f} deg"


def _table(title: str, rows: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in rows)
    lines = [title] + [f"  {k.ljust(width)}  {v}" for k, v in rows]
    return "\n".join(lines) + "\n"


def text_metrics(kind: str, m: PolyhedronMetrics, vf: VertexFigure, faces: int, unit: str = "") -> str:
    return _table(
        f"Metrics: {kind}",
        [
            ("edges per vertex", str(vf.q)),
            ("face angle", _fmt_deg(vf.gamma)),
            ("edge-to-axis angle", _fmt_deg(vf.beta)),
            ("faces", str(faces)),
            ("inradius", _fmt_len(m.inradius, unit)),
            ("circumradius", _fmt_len(m.circumradius, unit)),
            ("face inradius", _fmt_len(m.face_inradius, unit)),
            ("face circumradius", _fmt_len(m.face_circumradius, unit)),
            ("dihedral angle", _fmt_deg(m.dihedral_angle)),
            ("second-row height", _fmt_len(m.second_row_height, unit)),
            ("resting height", _fmt_len(m.resting_height, unit)),
        ],
    )


def text_joint(kind: str, hub_name: str, vf: VertexFigure, joint: JointSolution,
               choice: ElbowChoice | None, unit: str) -> str:
    rows = [
        ("edges per vertex", str(vf.q)),
        ("face angle", _fmt_deg(vf.gamma)),
        ("edge-to-axis angle", _fmt_deg(joint.beta)),
        ("hub arm-to-axis angle", _fmt_deg(joint.alpha)),
        ("required elbow bend", _fmt_deg(joint.delta)),
    ]
    if choice is None:
        rows.append(("chosen elbow", "none (hub arms lie along the edges)"))
    else:
        rows.append((
            "chosen elbow",
            f"{choice.elbow.name} ({_fmt_deg(choice.elbow.bend_angle)}, error {_fmt_deg(choice.error, True)})",
        ))
        if choice.face_angle_realized is not None:
            rows.append((
                "realized face angle",
                f"{_fmt_deg(choice.face_angle_realized)} (error {_fmt_deg(choice.face_angle_error, True)})",
            ))
    rows += [
        ("hub arm length", _fmt_len(joint.arm_length, unit)),
        ("vertex offset", _fmt_len(joint.h, unit)),
        ("edge extension", _fmt_len(joint.e, unit)),
    ]
    return _table(f"Joint: {kind} vertex on {hub_name}", rows)


def text_size(kind: str, r: SizeReport, unit: str) -> str:
    return _table(
        f"Size: {kind} resting on a face",
        [
            ("edge length", _fmt_len(r.edge_length, unit)),
            ("standing height", _fmt_len(r.standing_height, unit)),
            ("second-row height", _fmt_len(r.second_row_height, unit)),
            ("interior standing diameter", _fmt_len(r.interior_standing_diameter, unit)),
            ("overall diameter", _fmt_len(r.overall_diameter, unit)),
            ("base diameter", _fmt_len(r.base_diameter, unit)),
        ],
    )


def text_bom(kind: str, bom: BillOfMaterials, edge_length: float, edge_unit: str,
             cut_unit: str, edge_in_cut_unit: float | None = None) -> str:
    head = f"Bill of materials: {kind}, edge {_fmt_len(edge_length, edge_unit)}"
    if edge_in_cut_unit is not None and edge_unit != cut_unit:
        head += f" ({_fmt_len(edge_in_cut_unit, cut_unit)})"
    lines = [head]
    items = [(bom.hub_count, f"{bom.hub_name} hub", "")]
    if bom.elbow_count:
        items.append((bom.elbow_count, f"{bom.elbow_name} elbow", ""))
        items.append((bom.stub_count, "stub pipe", _fmt_len(bom.stub_cut_length, cut_unit)))
    items.append((bom.edge_pipe_count, "edge pipe", _fmt_len(bom.edge_cut_length, cut_unit)))
    width = max(len(name) for _, name, _ in items)
    lines.append(f"  {'qty':>4}  {'item'.ljust(width)}  cut length")
    for qty, name, cut in items:
        lines.append(f"  {qty:>4}  {name.ljust(width)}  {cut}".rstrip())
    lines.append(f"  {'-':>4}  {bom.glue}")
    return "\n".join(lines) + "\n"


def text_asbuilt(kind: str, hub_name: str, bend: float, L: float, unit: str,
                 report: AsBuiltReport, flex: FlexSolution) -> str:
    flex_deg = ", ".join(f"{math.degrees(v):+.2f}" for v in flex.per_joint_flex)
    status = "converged" if flex.converged else f"not converged after {flex.iterations} iterations"
    return _table(
        f"As built: {kind} on {hub_name} with {math.degrees(bend):.2f} deg elbows",
        [
            ("realized face angle", _fmt_deg(report.realized_face_angle)),
            ("face angle error", _fmt_deg(report.face_angle_error, True)),
            ("edge length", _fmt_len(L, unit)),
            ("max position gap / edge", f"{report.max_position_gap:.3e}"),
            ("mean position gap / edge", f"{report.mean_position_gap:.3e}"),
            ("max orientation gap", _fmt_deg(report.max_orientation_gap)),
            ("flex per corner (deg)", f"[{flex_deg}]"),
            ("gap after flex", f"{flex.residual:.3e} {unit}".rstrip()),
            ("lambda", f"{flex.lam:g}"),
            ("solver", status),
        ],
    )


def export_obj(geometry, sink=None) -> str:
    """Write a wireframe as OBJ ``v``/``l`` records (1-based, 15 significant digits).

    ``geometry`` is a Polyhedron (its edges become segments) or an (n, 3)
    array of polyline points joined in order. The text is returned and, if
    ``sink`` is given, written to it (text or binary stream).
    """
    if isinstance(geometry, Polyhedron):
        points = np.asarray(geometry.vertices)
        segments = list(geometry.edges)
    else:
        points = np.asarray(geometry, dtype=float)
        if points.ndim != 2 or points.shape[1] not in (2, 3):
            raise ValueError("polyline must be an (n, 2) or (n, 3) array")
        if points.shape[1] == 2:
            points = np.column_stack([points, np.zeros(len(points))])
        segments = [(i, i + 1) for i in range(len(points) - 1)]
    lines = ["v " + " ".join(f"{c + 0.0:.15g}" for c in p) for p in points]
    lines += [f"l {i + 1} {j + 1}" for i, j in segments]
    text = "\n".join(lines) + "\n"
    if sink is not None:
        try:
            sink.write(text)
        except TypeError:
            sink.write(text.encode("ascii"))
    return text
