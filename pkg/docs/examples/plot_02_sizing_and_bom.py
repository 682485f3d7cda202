"""
Sizing a walk-in dodecahedron
=============================

Pick a standing height, get the edge length, the clearances, and a
shopping list with cut lengths.
"""

from pipefit import (
    bill_of_materials,
    edge_length_for_height,
    select_elbow,
    size_report,
    solid_vertex_figure,
    solve_joint,
    standard_catalog,
)

height_ft = 6.0
L = edge_length_for_height("dodecahedron", height_ft)
report = size_report("dodecahedron", L)
for field, value in vars(report).items():
    print(f"{field:28s} {value:7.3f} ft")

###############################################################################
# The fittings are measured in inches, so the edge goes to inches before the
# cut list is built.

catalog = standard_catalog()
wye = catalog.hub("true-wye")
vf = solid_vertex_figure("dodecahedron")
choice = select_elbow(solve_joint(vf, wye).delta, catalog, vf, wye)
bom = bill_of_materials("dodecahedron", wye, choice, L * 12.0)

print(f"{bom.hub_count:3d} x {bom.hub_name}")
print(f"{bom.elbow_count:3d} x {bom.elbow_name}")
print(f"{bom.stub_count:3d} x stub pipe, {bom.stub_cut_length:.3f} in")
print(f"{bom.edge_pipe_count:3d} x edge pipe, {bom.edge_cut_length:.3f} in")
print(f"      {bom.glue}")

###############################################################################
# Real fittings have socket depth. An elbow whose centre sits 0.75 in from its
# socket mouth with 0.5 in sockets changes the cuts.

from dataclasses import replace

deep = replace(choice, elbow=replace(choice.elbow, takeoff=0.75, socket_depth=0.5))
bom2 = bill_of_materials("dodecahedron", wye, deep, L * 12.0)
print(f"with socket allowances: stub {bom2.stub_cut_length:.3f} in, edge {bom2.edge_cut_length:.3f} in")
