"""Scale a solid to a target size and list the parts needed to build it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .fittings import HubFitting
from .geometry import platonic_solid, polyhedron_metrics, solid_vertex_figure
from .joint import (
    ElbowChoice,
    edge_cut_length,
    solve_joint,
    straight_edge_cut_length,
    stub_cut_length,
)

GLUE_ITEM = "PVC primer and cement, as needed"


@dataclass(frozen=True)
class SizeReport:
    """Overall dimensions of a solid resting on a face.

    ``interior_standing_diameter`` is twice the face inradius times the
    edge, the room available standing on the floor face.
    """

    edge_length: float
    standing_height: float
    second_row_height: float
    interior_standing_diameter: float
    overall_diameter: float
    base_diameter: float


@dataclass(frozen=True)
class BillOfMaterials:
    hub_name: str
    elbow_name: Optional[str]
    hub_count: int
    elbow_count: int
    stub_count: int
    edge_pipe_count: int
    edge_cut_length: float
    stub_cut_length: Optional[float]
    glue: str = GLUE_ITEM


def edge_length_for_height(kind: str, height: float) -> float:
    """Edge length that makes the face-resting solid ``height`` tall."""
    if not height > 0:
        raise ValueError(f"height must be positive, got {height}")
    return height / polyhedron_metrics(platonic_solid(kind)).resting_height


def size_report(kind: str, L: float) -> SizeReport:
    if not L > 0:
        raise ValueError(f"edge length must be positive, got {L}")
    m = polyhedron_metrics(platonic_solid(kind))
    return SizeReport(
        edge_length=L,
        standing_height=m.resting_height * L,
        second_row_height=m.second_row_height * L,
        interior_standing_diameter=2.0 * m.face_inradius * L,
        overall_diameter=2.0 * m.circumradius * L,
        base_diameter=2.0 * m.face_circumradius * L,
    )


def bill_of_materials(
    kind: str,
    hub: HubFitting,
    elbow_choice: Optional[ElbowChoice],
    L: float,
) -> BillOfMaterials:
    """Part counts and cut lengths for a full build.

    ``L`` is the vertex-to-vertex edge length in the hub's length unit.
    Joints whose exact bend is zero (the hub arms already lie along the
    edges) need no elbows or stubs; ``elbow_choice`` is ignored for them
    and may be None.

    Raises:
        NonPositiveCutError: the edge is too short for the fittings.
        ArityMismatchError: the hub does not fit the solid's vertices.
    """
    solid = platonic_solid(kind)
    joint = solve_joint(solid_vertex_figure(kind), hub)
    n_v, n_e = solid.num_vertices, solid.num_edges

    if not joint.needs_elbow:
        return BillOfMaterials(
            hub_name=hub.name,
            elbow_name=None,
            hub_count=n_v,
            elbow_count=0,
            stub_count=0,
            edge_pipe_count=n_e,
            edge_cut_length=straight_edge_cut_length(L, hub),
            stub_cut_length=None,
        )
    if elbow_choice is None:
        raise ValueError(f"hub {hub.name!r} on a {kind} needs an elbow choice")
    elbow = elbow_choice.elbow
    return BillOfMaterials(
        hub_name=hub.name,
        elbow_name=elbow.name,
        hub_count=n_v,
        elbow_count=2 * n_e,
        stub_count=2 * n_e,
        edge_pipe_count=n_e,
        edge_cut_length=edge_cut_length(L, joint, elbow),
        stub_cut_length=stub_cut_length(hub, elbow),
    )
