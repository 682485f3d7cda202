"""Vertex joint solver: elbow bend, hub offset, edge extension, cut lengths.

A hub sits on the vertex's symmetry axis with its arms at angle ``alpha`` to
the axis. Each edge leaves the true vertex at angle ``beta`` to the same
axis, so an elbow at each arm tip must turn the pipe by ``alpha - beta``.
Placing the elbow centre on the edge line fixes the rest:

    e = arm * sin(alpha) / sin(beta)          (vertex to elbow centre)
    h = arm * sin(alpha - beta) / sin(beta)   (vertex to hub centre)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    ArityMismatchError,
    BendRangeError,
    DegenerateJointError,
    NonPositiveCutError,
)
from .fittings import Catalog, ElbowFitting, HubFitting
from .geometry import VertexFigure

# Elbow bends closer than this count as a tie.
TIE_TOL = 1e-12


@dataclass(frozen=True)
class JointSolution:
    """Geometry of one vertex joint, lengths in the hub's unit.

    ``delta`` is signed: negative means the arms point inside the edge cone
    and the elbows must bend outward.
    """

    delta: float
    h: float
    e: float
    beta: float
    alpha: float
    arm_length: float

    @property
    def needs_elbow(self) -> bool:
        return abs(self.delta) > 1e-9


@dataclass(frozen=True)
class ElbowChoice:
    elbow: ElbowFitting
    error: float
    face_angle_realized: Optional[float] = None
    face_angle_error: Optional[float] = None


def solve_joint(vf: VertexFigure, hub: HubFitting) -> JointSolution:
    if hub.arm_count != vf.q:
        raise ArityMismatchError(
            f"hub {hub.name!r} has {hub.arm_count} arms but the vertex has {vf.q} edges"
        )
    if vf.beta <= 0.0:
        raise DegenerateJointError("edge-to-axis angle is zero; edges coincide with the axis")
    sb = math.sin(vf.beta)
    delta = hub.alpha - vf.beta
    return JointSolution(
        delta=delta,
        h=hub.arm_length * math.sin(delta) / sb,
        e=hub.arm_length * math.sin(hub.alpha) / sb,
        beta=vf.beta,
        alpha=hub.alpha,
        arm_length=hub.arm_length,
    )


def realized_vertex(vf: VertexFigure, hub: HubFitting, bend: float) -> float:
    """Face angle produced when every arm of ``hub`` is bent by ``bend``.

    The edges then sit at ``alpha - bend`` to the axis and adjacent edges
    enclose 2*asin(sin(alpha - bend) * sin(pi/q)).

    Raises:
        BendRangeError: if ``alpha - bend`` is outside (0, pi/2].
    """
    beta = hub.alpha - bend
    if not 0.0 < beta <= math.pi / 2 + 1e-12:
        raise BendRangeError(
            f"a {math.degrees(bend):.4g} degree bend on hub {hub.name!r} leaves the edges "
            f"{math.degrees(beta):.4g} degrees from the axis; must be in (0, 90]"
        )
    return 2.0 * math.asin(min(1.0, math.sin(beta) * math.sin(math.pi / vf.q)))


def select_elbow(
    delta: float,
    catalog: Catalog,
    vf: Optional[VertexFigure] = None,
    hub: Optional[HubFitting] = None,
) -> ElbowChoice:
    """Pick the catalog elbow closest to ``|delta|``; ties go to the smaller bend.

    When ``vf`` and ``hub`` are given, the realized face angle and its error
    are filled in.
    """
    target = abs(delta)
    best = None
    for elbow in catalog.require_elbows():
        gap = abs(elbow.bend_angle - target)
        if best is None:
            best = (gap, elbow)
            continue
        if gap < best[0] - TIE_TOL or (
            abs(gap - best[0]) <= TIE_TOL and elbow.bend_angle < best[1].bend_angle
        ):
            best = (gap, elbow)
    elbow = best[1]
    realized = realized_err = None
    if vf is not None and hub is not None:
        realized = realized_vertex(vf, hub, math.copysign(elbow.bend_angle, delta))
        realized_err = realized - vf.gamma
    return ElbowChoice(elbow, elbow.bend_angle - target, realized, realized_err)


def edge_cut_length(L: float, joint: JointSolution, elbow: ElbowFitting) -> float:
    """Pipe length between two elbows on an edge of vertex-to-vertex length ``L``."""
    cut = L - 2.0 * joint.e - 2.0 * elbow.takeoff + 2.0 * elbow.socket_depth
    if cut <= 0:
        raise NonPositiveCutError(
            f"edge length {L:g} is too short: the joints use {L - cut:g} of it"
        )
    return cut


def straight_edge_cut_length(L: float, hub: HubFitting, hub_mouth: float = 0.0) -> float:
    """Edge pipe for an elbow-free joint, running hub socket to hub socket.

    With a zero bend the hub centre is the vertex, so the edge pipe spans
    the full vertex distance less the hub bodies.
    """
    cut = L - 2.0 * hub_mouth + 2.0 * hub.socket_depth
    if cut <= 0:
        raise NonPositiveCutError(f"edge length {L:g} is too short for hub {hub.name!r}")
    return cut


def stub_cut_length(hub: HubFitting, elbow: ElbowFitting, hub_mouth: float = 0.0) -> float:
    """Short pipe joining a hub arm to its elbow.

    ``hub_mouth`` is the hub-centre to socket-mouth distance; with the
    default of 0 and no socket depths the stub equals the arm length.
    """
    cut = hub.arm_length - hub_mouth - elbow.takeoff + hub.socket_depth + elbow.socket_depth
    if cut <= 0:
        raise NonPositiveCutError(
            f"hub {hub.name!r} arm of {hub.arm_length:g} is too short for elbow {elbow.name!r}"
        )
    return cut
