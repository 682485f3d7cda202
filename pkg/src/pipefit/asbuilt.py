"""As-built simulation: what standard elbows do to face closure.

A face is walked in its own plane as a chain of rigid motions (advance one
edge, turn by the exterior angle). With exact interior angles the chain
returns to its start; otherwise the leftover transform measures the gap.
``compensate`` then asks how far each corner has to flex to close it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ArityMismatchError
from .fittings import HubFitting
from .geometry import platonic_solid, solid_vertex_figure
from .joint import realized_vertex

FD_STEP = 1e-7
STEP_TOL = 1e-10
MAX_ITER = 200


@dataclass(frozen=True)
class ClosureResult:
    position_gap: float
    orientation_gap: float
    per_corner_angle: float


@dataclass(frozen=True)
class AsBuiltReport:
    """Per-face closure for a whole solid; summary gaps are divided by L."""

    realized_face_angle: float
    face_angle_error: float
    faces: tuple[ClosureResult, ...]
    max_position_gap: float
    mean_position_gap: float
    max_orientation_gap: float
    mean_orientation_gap: float


@dataclass(frozen=True)
class FlexSolution:
    """Corner flex that closes a face loop.

    ``objective`` is the closure cost in edge-normalized form (position gap
    over L from every start corner, plus the heading gap) plus
    lam * sum(flex^2).
    """

    per_joint_flex: tuple[float, ...]
    residual: float
    objective: float
    lam: float
    converged: bool
    iterations: int


def _step(L: float, turn: float) -> np.ndarray:
    c, s = math.cos(turn), math.sin(turn)
    # advance L along local x, then rotate the heading by `turn`
    return np.array([[c, -s, L], [s, c, 0.0], [0.0, 0.0, 1.0]])


def loop_transform(L: float, interior_angles: Sequence[float]) -> np.ndarray:
    """Composite SE(2) transform of one trip around the loop."""
    pose = np.eye(3)
    for a in interior_angles:
        pose = pose @ _step(L, math.pi - a)
    return pose


def _gaps(pose: np.ndarray) -> tuple[float, float]:
    position = float(math.hypot(pose[0, 2], pose[1, 2]))
    orientation = abs(math.atan2(pose[1, 0], pose[0, 0]))
    return position, orientation


def face_loop_walk(n: int, L: float, interior_angle: float) -> ClosureResult:
    if n < 3:
        raise ValueError(f"a face needs at least 3 corners, got {n}")
    if not L > 0:
        raise ValueError(f"edge length must be positive, got {L}")
    if not 0.0 < interior_angle < math.pi:
        raise ValueError("interior angle must lie in (0, pi)")
    pos, ori = _gaps(loop_transform(L, [interior_angle] * n))
    return ClosureResult(pos, ori, interior_angle)


def walk_polyline(n: int, L: float, interior_angle: float) -> np.ndarray:
    """Corner positions of the walk as an (n + 1, 3) array in the z = 0 plane.

    The last point is where the walk ends, which is the start only when the
    loop closes.
    """
    pose = np.eye(3)
    points = [pose[:2, 2].copy()]
    for _ in range(n):
        pose = pose @ _step(L, math.pi - interior_angle)
        points.append(pose[:2, 2].copy())
    out = np.zeros((n + 1, 3))
    out[:, :2] = points
    return out


def assemble_asbuilt(kind: str, hub: HubFitting, bend: float, L: float) -> AsBuiltReport:
    """Walk every face of ``kind`` built with ``hub`` and a ``bend`` elbow."""
    solid = platonic_solid(kind)
    vf = solid_vertex_figure(kind)
    if hub.arm_count != vf.q:
        raise ArityMismatchError(
            f"hub {hub.name!r} has {hub.arm_count} arms but a {kind} vertex has {vf.q} edges"
        )
    gamma = realized_vertex(vf, hub, bend)
    faces = tuple(face_loop_walk(len(f), L, gamma) for f in solid.faces)
    pos = np.array([r.position_gap for r in faces]) / L
    ori = np.array([r.orientation_gap for r in faces])
    return AsBuiltReport(
        realized_face_angle=gamma,
        face_angle_error=gamma - vf.gamma,
        faces=faces,
        max_position_gap=float(pos.max()),
        mean_position_gap=float(pos.mean()),
        max_orientation_gap=float(ori.max()),
        mean_orientation_gap=float(ori.mean()),
    )


def _closure_residuals(angles: np.ndarray) -> np.ndarray:
    # Gap seen from every start corner, so no corner is privileged.
    n = len(angles)
    out = []
    for k in range(n):
        pose = loop_transform(1.0, np.roll(angles, -k))
        out += [pose[0, 2], pose[1, 2]]
    heading = float(np.sum(math.pi - angles) - 2.0 * math.pi)
    out.append(heading * math.sqrt(n))
    return np.array(out) / math.sqrt(n)


def compensate(n: int, L: float, interior_angle: float, lam: float) -> FlexSolution:
    """Corner flex that closes an n-gon walked with ``interior_angle``.

    Damped Gauss-Newton on the closure gap with a central-difference
    Jacobian. ``lam`` is a Tikhonov weight on each update, so every step
    solves min |r + J d|^2 + lam |d|^2 (the damping never drops below
    ``lam``). Starting from zero flex this settles on the smallest flex that
    closes the loop. Stops once a step is shorter than 1e-10 rad or after
    200 iterations; ``converged`` says which.
    """
    if n < 3:
        raise ValueError(f"a face needs at least 3 corners, got {n}")
    if not L > 0:
        raise ValueError(f"edge length must be positive, got {L}")
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")

    base = np.full(n, float(interior_angle))

    def residuals(x):
        return _closure_residuals(base + x)

    def jacobian(x):
        cols = []
        for i in range(n):
            dx = np.zeros(n)
            dx[i] = FD_STEP
            cols.append((residuals(x + dx) - residuals(x - dx)) / (2 * FD_STEP))
        return np.column_stack(cols)

    x = np.zeros(n)
    r = residuals(x)
    cost = float(r @ r)
    mu = max(lam, 1e-3)
    converged = cost == 0.0
    it = 0
    while not converged and it < MAX_ITER:
        it += 1
        J = jacobian(x)
        step = np.linalg.solve(J.T @ J + mu * np.eye(n), -J.T @ r)
        r_trial = residuals(x + step)
        cost_trial = float(r_trial @ r_trial)
        if cost_trial < cost:
            x, r, cost = x + step, r_trial, cost_trial
            mu = max(mu / 10.0, lam, 1e-15)
        else:
            mu *= 10.0
        converged = bool(np.linalg.norm(step) < STEP_TOL or cost == 0.0)

    residual, _ = _gaps(loop_transform(L, base + x))
    return FlexSolution(
        per_joint_flex=tuple(float(v) for v in x),
        residual=residual,
        objective=cost + lam * float(x @ x),
        lam=lam,
        converged=converged,
        iterations=it,
    )
