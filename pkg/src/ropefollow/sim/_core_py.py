"""Pure-Python projection kernels: the fallback twin of the compiled core.

Every arithmetic expression here mirrors ``_core.pyx`` operation for
operation, so both backends produce bit-identical trajectories.
"""
from __future__ import annotations

import math

import numpy as np

COMPILED = False

_EPS_DIST = 1e-12


def _sweep(pos: np.ndarray, inv_mass: np.ndarray, rest: float, stride: int, k: float) -> int:
    """One Gauss-Seidel pass of distance constraints between particles i and i+stride."""
    n = pos.shape[0]
    skipped = 0
    for i in range(n - stride):
        j = i + stride
        wi = inv_mass[i]
        wj = inv_mass[j]
        wsum = wi + wj
        if wsum == 0.0:
            continue
        dx = pos[j, 0] - pos[i, 0]
        dy = pos[j, 1] - pos[i, 1]
        dist = math.sqrt(dx * dx + dy * dy)
        if dist < _EPS_DIST:
            skipped += 1
            continue
        s = k * (dist - rest) / (dist * wsum)
        cx = s * dx
        cy = s * dy
        pos[i, 0] += wi * cx
        pos[i, 1] += wi * cy
        pos[j, 0] -= wj * cx
        pos[j, 1] -= wj * cy
    return skipped


def project_distance(pos, inv_mass, rest, stride, k, iterations):
    skipped = 0
    for _ in range(iterations):
        skipped += _sweep(pos, inv_mass, rest, stride, k)
    return skipped


def step_once(pos, vel, inv_mass, rest, k_stretch, k_bend, iterations, dt,
              friction_decel, damping):
    """One PBD substep: predict, project, derive velocities, friction, damping.

    Mutates ``pos`` and ``vel`` in place; returns the skipped-constraint count.
    """
    n = pos.shape[0]
    ks = k_stretch if k_stretch < 1.0 else 1.0
    kb = min(max(k_bend, 0.0), 1.0)

    old = pos.copy()
    pos += vel * dt

    skipped = 0
    for _ in range(iterations):
        skipped += _sweep(pos, inv_mass, rest, 1, ks)
        if n >= 3:
            skipped += _sweep(pos, inv_mass, 2.0 * rest, 2, kb)

    np.subtract(pos, old, out=old)
    np.divide(old, dt, out=vel)

    fd = friction_decel * dt
    speed = np.sqrt(vel[:, 0] * vel[:, 0] + vel[:, 1] * vel[:, 1])
    moving = speed > 0.0
    factor = np.ones_like(speed)
    factor[moving] = 1.0 - fd / speed[moving]
    np.maximum(factor, 0.0, out=factor)
    vel *= factor[:, None]

    vel *= 1.0 - damping
    return skipped
