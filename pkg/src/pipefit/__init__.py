"""Platonic solids from off-the-shelf pipe fittings.

Joint angles, cut lists, bills of materials, size reports and an as-built
closure simulator for hubs bent with standard elbows.
"""

from .asbuilt import (
    AsBuiltReport,
    ClosureResult,
    FlexSolution,
    assemble_asbuilt,
    compensate,
    face_loop_walk,
    walk_polyline,
)
from .errors import (
    ArityMismatchError,
    BendRangeError,
    CatalogError,
    DegenerateJointError,
    EmptyCatalogError,
    InfeasibleVertexError,
    NonPositiveCutError,
    PipefitError,
)
from .fittings import (
    Catalog,
    ElbowFitting,
    HubFitting,
    dump_catalog,
    load_catalog,
    standard_catalog,
)
from .geometry import (
    KINDS,
    Polyhedron,
    PolyhedronMetrics,
    RigidTransform,
    VertexFigure,
    edge_axis_angle,
    platonic_solid,
    polyhedron_metrics,
    resting_orientation,
    solid_vertex_figure,
    vertex_figure,
)
from .joint import (
    ElbowChoice,
    JointSolution,
    edge_cut_length,
    realized_vertex,
    select_elbow,
    solve_joint,
    stub_cut_length,
)
from .report import export_obj, render_json
from .sizing import (
    BillOfMaterials,
    SizeReport,
    bill_of_materials,
    edge_length_for_height,
    size_report,
)

__version__ = "0.1.0"
