"""
The dodecahedron vertex joint
=============================

Three pentagons meet at every vertex of a dodecahedron. A true wye holds
three pipes in a plane, 120 degrees apart, so each arm needs an elbow to
tip it down onto the real edge direction. Here we work out that elbow,
where the real vertex sits relative to the wye, and what a stock 22.5
degree elbow does to the pentagons.
"""

import math

from pipefit import (
    realized_vertex,
    select_elbow,
    solid_vertex_figure,
    solve_joint,
    standard_catalog,
)

catalog = standard_catalog()
wye = catalog.hub("true-wye")  # 2.5 in from wye centre to elbow centre
vf = solid_vertex_figure("dodecahedron")
print(f"q = {vf.q}, face angle = {math.degrees(vf.gamma):.2f} deg, "
      f"edge-to-axis = {math.degrees(vf.beta):.3f} deg")

###############################################################################
# Exact joint geometry. The offset and extension scale with the arm length.

joint = solve_joint(vf, wye)
print(f"required elbow   {math.degrees(joint.delta):.3f} deg")
print(f"vertex offset    {joint.h:.3f} in  ({joint.h / wye.arm_length:.5f} x arm)")
print(f"edge extension   {joint.e:.3f} in  ({joint.e / wye.arm_length:.5f} x arm)")

###############################################################################
# Nobody sells a 20.9 degree elbow. The nearest stock bend is 22.5 degrees;
# the pentagon corners then come out a little under 108 degrees.

choice = select_elbow(joint.delta, catalog, vf, wye)
print(f"chosen {choice.elbow.name}: bend error {math.degrees(choice.error):+.2f} deg, "
      f"pentagon angle {math.degrees(choice.face_angle_realized):.2f} deg "
      f"({math.degrees(choice.face_angle_error):+.2f} deg)")

###############################################################################
# Sweep the bend to see how sensitive the pentagon angle is.

for bend in (11.25, 20.0, 20.905, 22.5, 30.0, 45.0):
    g = realized_vertex(vf, wye, math.radians(bend))
    print(f"  bend {bend:6.3f} deg -> pentagon corner {math.degrees(g):7.3f} deg")
