"""
How forgiving is the build?
===========================

With 22.5 degree elbows each pentagon corner is about 1.7 degrees short.
Walking a face edge by edge shows how far the loop misses closing, and the
compensation solver reports how much each corner has to flex to take up
the slack. The walk is also written out as an OBJ polyline.
"""

import math
import tempfile
from pathlib import Path

from pipefit import (
    assemble_asbuilt,
    compensate,
    export_obj,
    face_loop_walk,
    standard_catalog,
    walk_polyline,
)

wye = standard_catalog().hub("true-wye")
edge_in = 32.33  # 6 ft tall dodecahedron

built = assemble_asbuilt("dodecahedron", wye, math.radians(22.5), edge_in)
print(f"pentagon corner {math.degrees(built.realized_face_angle):.3f} deg, "
      f"open by {built.max_position_gap * edge_in:.2f} in per face "
      f"({math.degrees(built.max_orientation_gap):.2f} deg heading)")

flex = compensate(5, edge_in, built.realized_face_angle, lam=1e-3)
print("flex per corner:", ", ".join(f"{math.degrees(f):+.3f}" for f in flex.per_joint_flex), "deg")
print(f"gap after flex {flex.residual:.2e} in, {flex.iterations} iterations")

###############################################################################
# Gap against angle error. Small errors give a gap roughly proportional to
# the error.

for err in (0.0, 0.5, 1.0, 1.72, 3.0, 5.0):
    r = face_loop_walk(5, 1.0, math.radians(108 - err))
    print(f"  {err:4.2f} deg short -> gap {r.position_gap:.4f} edge lengths")

###############################################################################
# The open walk as a wireframe.

out = Path(tempfile.gettempdir()) / "pentagon_walk.obj"
out.write_text(export_obj(walk_polyline(5, 1.0, built.realized_face_angle)))
print(f"wrote {out}")
