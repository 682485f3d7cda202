"""Command-line interface.

    pipefit metrics    --solid dodecahedron
    pipefit joint      --solid dodecahedron --hub true-wye
    pipefit size       --solid dodecahedron --height 6ft
    pipefit bom        --solid dodecahedron --height 6ft
    pipefit simulate   --solid dodecahedron --hub true-wye --bend 22.5
    pipefit export-obj --solid dodecahedron

Exit status: 0 success, 1 domain error (infeasible geometry, cut too
short), 2 usage or parse error. Results go to stdout (or ``--output``),
diagnostics to stderr. ``PIPEFIT_CATALOG`` names a default catalog file.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Optional, Sequence, TextIO

from . import report
from .asbuilt import assemble_asbuilt, compensate, walk_polyline
from .errors import CatalogError, PipefitError
from .fittings import Catalog, HubFitting, load_catalog, standard_catalog
from .geometry import KINDS, platonic_solid, polyhedron_metrics, solid_vertex_figure
from .joint import select_elbow, solve_joint
from .sizing import bill_of_materials, edge_length_for_height, size_report
from .units import UnitError, convert, parse_length

CATALOG_ENV = "PIPEFIT_CATALOG"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        if message:
            raise UsageError(message.strip())
        raise _EarlyExit(status)


class _EarlyExit(Exception):
    def __init__(self, status):
        self.status = status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pipefit", description="Platonic solids from standard pipe fittings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, solid_required=True):
        p.add_argument("--solid", choices=KINDS, required=solid_required)
        p.add_argument("--catalog", help=f"catalog JSON file (default: ${CATALOG_ENV} or built-in)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", "-o", help="write the result here instead of stdout")

    def fittings(p):
        p.add_argument("--hub", help="hub name (default: first catalog hub with the right arm count)")
        p.add_argument("--elbow", help="elbow name (default: closest bend in the catalog)")
        p.add_argument("--arm-length", help="override the hub arm length, e.g. 2.5in")
        p.add_argument("--fitting-unit", default="in", help="unit label of fitting dimensions (default in)")

    def sizing(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--height", help="standing height, e.g. 6ft")
        g.add_argument("--edge", help="edge length, e.g. 2.7ft")

    p = sub.add_parser("metrics", help="unit-edge metrics and vertex figure")
    common(p)
    p.add_argument("--edge", help="scale to this edge length")

    p = sub.add_parser("joint", help="elbow bend and joint geometry")
    common(p)
    fittings(p)

    p = sub.add_parser("size", help="overall dimensions for a target size")
    common(p)
    sizing(p)

    p = sub.add_parser("bom", help="bill of materials and cut list")
    common(p)
    fittings(p)
    sizing(p)

    p = sub.add_parser("simulate", help="face closure with standard elbows")
    common(p)
    fittings(p)
    p.add_argument("--bend", type=float, help="elbow bend in degrees (default: chosen elbow)")
    p.add_argument("--edge", default="1", help="edge length (default 1)")
    p.add_argument("--lambda", dest="lam", type=float, default=1e-3, help="flex regularization weight")

    p = sub.add_parser("export-obj", help="OBJ wireframe of a solid or a face walk")
    common(p, solid_required=False)
    p.add_argument("--edge", default="1", help="edge length (default 1)")
    p.add_argument("--walk", type=int, metavar="N", help="export an N-corner face walk instead")
    p.add_argument("--angle", type=float, help="interior angle of the walk in degrees")
    return parser


def _catalog(args) -> Catalog:
    path = args.catalog or os.environ.get(CATALOG_ENV)
    if not path:
        return standard_catalog()
    try:
        with open(path, "rb") as fh:
            return load_catalog(fh)
    except OSError as exc:
        raise UsageError(f"cannot read catalog {path}: {exc.strerror}") from exc
    except CatalogError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _hub(args, catalog: Catalog, q: int) -> tuple[HubFitting, str]:
    unit = args.fitting_unit
    if args.hub:
        try:
            hub = catalog.hub(args.hub)
        except CatalogError as exc:
            raise UsageError(str(exc)) from exc
    else:
        matches = catalog.hubs_for(q)
        if not matches:
            raise PipefitError(f"catalog has no hub with {q} arms")
        hub = matches[0]
    if args.arm_length:
        value, label = parse_length(args.arm_length)
        if label:
            unit = label
        hub = hub.with_arm_length(value)
    return hub, unit


def _elbow_choice(args, catalog, joint, vf, hub):
    if not joint.needs_elbow and not args.elbow:
        return None
    if args.elbow:
        try:
            elbow = catalog.elbow(args.elbow)
        except CatalogError as exc:
            raise UsageError(str(exc)) from exc
        trimmed = Catalog(hubs=(), elbows=(elbow,))
        return select_elbow(joint.delta, trimmed, vf, hub)
    return select_elbow(joint.delta, catalog, vf, hub)


def _edge_from_args(kind: str, args) -> tuple[float, str]:
    if args.height:
        h, unit = parse_length(args.height)
        return edge_length_for_height(kind, _positive(h, "height")), unit
    L, unit = parse_length(args.edge)
    return _positive(L, "edge length"), unit


def _positive(value: float, what: str) -> float:
    if not value > 0 or not math.isfinite(value):
        raise UsageError(f"{what} must be a positive number")
    return value


def _cmd_metrics(args) -> str:
    p = platonic_solid(args.solid)
    L, unit = parse_length(args.edge) if args.edge else (1.0, "")
    _positive(L, "edge length")
    m = polyhedron_metrics(p).scaled(L)
    vf = solid_vertex_figure(args.solid)
    if args.format == "json":
        return report.render_json(
            m, solid=args.solid, edge_length=L, unit=unit, vertex_figure=report.to_record(vf),
            num_vertices=p.num_vertices, num_edges=p.num_edges, num_faces=p.num_faces,
        )
    return report.text_metrics(args.solid, m, vf, p.num_faces, unit)


def _cmd_joint(args) -> str:
    catalog = _catalog(args)
    vf = solid_vertex_figure(args.solid)
    hub, unit = _hub(args, catalog, vf.q)
    joint = solve_joint(vf, hub)
    choice = _elbow_choice(args, catalog, joint, vf, hub)
    if args.format == "json":
        extra = report.to_record(choice) if choice else {"chosen_elbow": None}
        return report.render_json(
            joint, solid=args.solid, hub=hub.name, unit=unit, q=vf.q,
            face_angle_deg=math.degrees(vf.gamma), **extra,
        )
    return report.text_joint(args.solid, hub.name, vf, joint, choice, unit)


def _cmd_size(args) -> str:
    L, unit = _edge_from_args(args.solid, args)
    r = size_report(args.solid, L)
    if args.format == "json":
        return report.render_json(r, solid=args.solid, unit=unit)
    return report.text_size(args.solid, r, unit)


def _cmd_bom(args) -> str:
    catalog = _catalog(args)
    vf = solid_vertex_figure(args.solid)
    hub, fit_unit = _hub(args, catalog, vf.q)
    L, edge_unit = _edge_from_args(args.solid, args)
    # a bare number is taken to be in the fitting unit
    L_fit = convert(L, edge_unit or fit_unit, fit_unit)
    joint = solve_joint(vf, hub)
    choice = _elbow_choice(args, catalog, joint, vf, hub)
    bom = bill_of_materials(args.solid, hub, choice, L_fit)
    if args.format == "json":
        return report.render_json(
            bom, solid=args.solid, edge_length=L, edge_length_unit=edge_unit,
            edge_length_in_cut_unit=L_fit, cut_unit=fit_unit,
        )
    shown = L_fit if edge_unit else None
    return report.text_bom(args.solid, bom, L, edge_unit, fit_unit, shown)


def _cmd_simulate(args) -> str:
    catalog = _catalog(args)
    vf = solid_vertex_figure(args.solid)
    hub, _ = _hub(args, catalog, vf.q)
    L, unit = parse_length(args.edge)
    _positive(L, "edge length")
    if args.lam < 0 or not math.isfinite(args.lam):
        raise UsageError("--lambda must be a non-negative number")
    joint = solve_joint(vf, hub)
    if args.bend is not None:
        bend = math.copysign(math.radians(args.bend), joint.delta) if args.bend else 0.0
    else:
        choice = _elbow_choice(args, catalog, joint, vf, hub)
        bend = 0.0 if choice is None else math.copysign(choice.elbow.bend_angle, joint.delta)
    built = assemble_asbuilt(args.solid, hub, bend, L)
    n = platonic_solid(args.solid).face_size
    flex = compensate(n, L, built.realized_face_angle, args.lam)
    if args.format == "json":
        return report.render_json(
            built, solid=args.solid, hub=hub.name, bend_deg=math.degrees(bend),
            edge_length=L, unit=unit, compensation=report.to_record(flex),
        )
    return report.text_asbuilt(args.solid, hub.name, bend, L, unit, built, flex)


def _cmd_export_obj(args) -> str:
    L, _ = parse_length(args.edge)
    _positive(L, "edge length")
    if args.walk is not None:
        if args.solid:
            raise UsageError("give either --solid or --walk, not both")
        if args.angle is None:
            raise UsageError("--walk needs --angle")
        if args.walk < 3 or not 0 < args.angle < 180:
            raise UsageError("--walk needs N >= 3 and 0 < --angle < 180")
        return report.export_obj(walk_polyline(args.walk, L, math.radians(args.angle)))
    if not args.solid:
        raise UsageError("export-obj needs --solid or --walk")
    return report.export_obj(platonic_solid(args.solid).scaled(L))


_COMMANDS = {
    "metrics": _cmd_metrics,
    "joint": _cmd_joint,
    "size": _cmd_size,
    "bom": _cmd_bom,
    "simulate": _cmd_simulate,
    "export-obj": _cmd_export_obj,
}


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        text = _COMMANDS[args.command](args)
    except _EarlyExit as exc:
        # --help
        return exc.status
    except (UsageError, UnitError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except PipefitError as exc:
        print(f"error: {exc}", file=stderr)
        return 1

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc.strerror}", file=stderr)
            return 1
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
