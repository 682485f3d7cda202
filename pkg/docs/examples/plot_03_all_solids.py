"""
Every Platonic solid and every hub
==================================

Which standard hub fits which solid, and what elbow each combination
needs. A negative bend means the arms point inside the edge cone and the
elbow has to turn outward.
"""

import math

from pipefit import (
    KINDS,
    platonic_solid,
    polyhedron_metrics,
    select_elbow,
    solid_vertex_figure,
    solve_joint,
    standard_catalog,
)

catalog = standard_catalog()

for kind in KINDS:
    p = platonic_solid(kind)
    m = polyhedron_metrics(p)
    vf = solid_vertex_figure(kind)
    print(f"{kind}: V={p.num_vertices} E={p.num_edges} F={p.num_faces}, "
          f"dihedral {math.degrees(m.dihedral_angle):.3f} deg, "
          f"edge-to-axis {math.degrees(vf.beta):.3f} deg")
    for hub in catalog.hubs_for(vf.q):
        joint = solve_joint(vf, hub)
        if not joint.needs_elbow:
            print(f"    {hub.name:16s} no elbow needed, the hub is the vertex")
            continue
        choice = select_elbow(joint.delta, catalog, vf, hub)
        print(f"    {hub.name:16s} bend {math.degrees(joint.delta):+7.3f} deg -> "
              f"{choice.elbow.name} (face angle off {math.degrees(choice.face_angle_error):+.2f} deg)")
