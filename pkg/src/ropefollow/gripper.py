"""Planar two-finger gripper.

Grip strength is realized by scaling the inverse mass of particles inside the
finger footprint: fully closed pins them (inverse mass 0), half closed or less
leaves them free. Held particles are co-moved with the gripper in proportion
to how strongly they are pinned.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

# Grip engages above this closure; particles are fully pinned at and beyond
# CLOSURE_FULL. Per-call displacement cap in meters.
CLOSURE_ENGAGE = 0.5
CLOSURE_FULL = 0.9
STEP_CAP = 0.0025


@dataclass(frozen=True)
class GripperState:
    x: float
    y: float
    closure: float  # 0 = fully open, 1 = fully closed
    finger_radius: float = 0.008
    finger_len: float = 0.03  # finger long axis along gripper-local y
    gap_open: float = 0.03

    @property
    def gap(self) -> float:
        """Finger gap; reaches zero at closure >= 0.9."""
        return self.gap_open * max(0.0, (CLOSURE_FULL - self.closure) / CLOSURE_FULL)


@dataclass(frozen=True)
class HeldSet:
    """Particles currently between the fingers."""

    indices: np.ndarray  # sorted int64

    @property
    def count(self) -> int:
        return int(self.indices.size)

    @property
    def mean_index(self) -> float:
        """Arithmetic mean of held indices; only defined when non-empty."""
        return float(self.indices.mean())

    @property
    def max_index(self) -> int:
        return int(self.indices.max())


def grip_inverse_mass(closure: float, nominal: float) -> float:
    """Inverse mass of a held particle at the given closure.

    Constant at ``nominal`` up to closure 0.5, then falls linearly to 0 at 0.9.
    """
    return max(2.25 * nominal - 2.5 * nominal * max(closure, 0.5), 0.0)


def footprint_mask(positions: np.ndarray, gripper: GripperState, pad: float = 0.0) -> np.ndarray:
    """Boolean mask of particles inside the finger footprint, inflated by pad."""
    dx = np.abs(positions[:, 0] - gripper.x)
    dy = np.abs(positions[:, 1] - gripper.y)
    return (dx <= gripper.finger_radius + pad) & (dy <= gripper.finger_len / 2.0 + pad)


def held_particles(chain, gripper: GripperState) -> HeldSet:
    mask = footprint_mask(chain.positions, gripper)
    return HeldSet(np.flatnonzero(mask).astype(np.int64))


def apply_grip(chain, gripper: GripperState, delta, held: HeldSet | None = None) -> HeldSet:
    """Set held-particle inverse masses for the current closure and co-move them
    with the gripper displacement ``delta``.

    Particles no longer held get their nominal inverse mass back. The anchor
    keeps inverse mass 0 and never translates. Pass ``held`` to reuse a
    membership computed earlier in the same action step.
    """
    if held is None:
        held = held_particles(chain, gripper)
    nominal = chain.params.nominal_inv_mass
    chain.inv_mass[1:] = nominal

    if held.count:
        w_p = grip_inverse_mass(gripper.closure, nominal)
        movable = held.indices[held.indices > 0]
        chain.inv_mass[movable] = w_p
        coeff = 1.0 - w_p / nominal
        if coeff > 0.0:
            chain.positions[movable, 0] += delta[0] * coeff
            chain.positions[movable, 1] += delta[1] * coeff
    return held


def move_gripper(gripper: GripperState, dx: float, dy: float, closure: float) -> GripperState:
    """Displace the gripper with per-call caps and set the closure, clamped to [0, 1]."""
    dx = min(max(dx, -STEP_CAP), STEP_CAP)
    dy = min(max(dy, -STEP_CAP), STEP_CAP)
    closure = min(max(closure, 0.0), 1.0)
    return replace(gripper, x=gripper.x + dx, y=gripper.y + dy, closure=closure)
