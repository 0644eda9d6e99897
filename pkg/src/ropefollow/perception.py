"""Distilled observation extraction: tactile line fit with closure-scaled noise,
top-view visual readout with gripper occlusion, and the masked 9-slot
observation vector.

Slot layout: [x_G, y_G, c_G, theta_T, y_T, v_V, q_V, theta_V, y_V].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DegenerateInputError
from .gripper import GripperState, HeldSet, footprint_mask

# Visible-run length that counts as full angle confidence.
K_CONF = 10

OBS_DIM = 9
KINEMATIC_SLOTS = slice(0, 3)
TACTILE_SLOTS = slice(3, 5)
VISUAL_SLOTS = slice(5, 9)

_HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class ModalityMask:
    """Which observation blocks reach the agent; masked blocks read as zero."""

    kinematic: bool = True
    tactile: bool = True
    visual: bool = True

    def __str__(self) -> str:
        parts = [c for c, on in (("K", self.kinematic), ("T", self.tactile), ("V", self.visual)) if on]
        return "+".join(parts) if parts else "none"

    @classmethod
    def from_string(cls, text: str) -> "ModalityMask":
        """Parse 'all', 'K', 'T+K', 'no-V', ... (case-insensitive)."""
        t = text.strip().lower()
        if t in ("all", "ktv", "k+t+v"):
            return cls(True, True, True)
        if t.startswith("no-"):
            drop = t[3:].strip()
            if drop not in ("k", "t", "v"):
                raise ConfigurationError(f"unknown modality in mask {text!r}")
            return cls(kinematic=drop != "k", tactile=drop != "t", visual=drop != "v")
        parts = [p.strip() for p in t.replace("+", ",").split(",") if p.strip()]
        if not parts or any(p not in ("k", "t", "v") for p in parts):
            raise ConfigurationError(f"cannot parse modality mask {text!r}")
        return cls(kinematic="k" in parts, tactile="t" in parts, visual="v" in parts)


_NOISE_PRESETS = {
    "off": (0.0, 0.0),
    "partial": (0.1, 0.0005),
    "full": (0.5, 0.002),
}


@dataclass(frozen=True)
class NoiseConfig:
    """Tactile sensor noise, scaled by (1 - closure) at sampling time."""

    sigma_theta: float = 0.0
    sigma_y: float = 0.0
    preset: str = "off"

    @classmethod
    def from_preset(cls, name: str) -> "NoiseConfig":
        try:
            sigma_theta, sigma_y = _NOISE_PRESETS[name]
        except KeyError:
            raise ConfigurationError(
                f"unknown noise preset {name!r}; choose from {sorted(_NOISE_PRESETS)}") from None
        return cls(sigma_theta, sigma_y, name)


@dataclass(frozen=True)
class TactileObs:
    theta: float  # rope angle vs gripper x-axis, in (-pi/2, pi/2]
    y: float      # rope intercept along the finger axis, gripper-relative


@dataclass(frozen=True)
class VisualObs:
    visible: float     # 1.0 if the rope emerges visibly to the right, else 0.0
    confidence: float  # visible-run length / K_CONF, capped at 1
    theta: float
    y: float

    @classmethod
    def nothing(cls) -> "VisualObs":
        return cls(0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class ObservationVector:
    values: np.ndarray  # (9,) float64
    mask: ModalityMask


def _wrap_line_angle(theta: float) -> float:
    """Reduce a line angle to (-pi/2, pi/2] (lines are directionless)."""
    theta = math.remainder(theta, math.pi)
    if theta <= -_HALF_PI:
        theta += math.pi
    return theta


def fit_line(points: np.ndarray, frame: GripperState) -> tuple[float, float]:
    """Total-least-squares line through ``points``, in the gripper frame.

    Returns (theta, intercept): the line angle against the frame x-axis in
    (-pi/2, pi/2] and the line's y at frame x = 0. Coincident points yield
    theta 0 and their common y.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 2:
        raise DegenerateInputError("line fit needs at least 2 points")
    rel = pts - np.array([frame.x, frame.y])
    cx, cy = rel.mean(axis=0)
    dx = rel[:, 0] - cx
    dy = rel[:, 1] - cy
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    sxy = float(dx @ dy)
    theta = _wrap_line_angle(0.5 * math.atan2(2.0 * sxy, sxx - syy))
    cos_t = math.cos(theta)
    if abs(cos_t) < 1e-9:
        intercept = float(cy)  # near-vertical: no crossing of x = 0 nearby
    else:
        intercept = float(cy - cx * math.tan(theta))
    return theta, intercept


def tactile_obs(chain, gripper: GripperState, held: HeldSet,
                noise: NoiseConfig, rng: np.random.Generator) -> TactileObs:
    """Line fit over held particles plus Gaussian noise scaled by (1 - closure).

    Fewer than two contact particles read as (0, 0), the masked-out value.
    """
    if held.count < 2:
        return TactileObs(0.0, 0.0)
    theta, y = fit_line(chain.positions[held.indices], gripper)
    scale = 1.0 - gripper.closure
    if noise.sigma_theta > 0.0 or noise.sigma_y > 0.0:
        noise_theta, noise_y = rng.standard_normal(2)
        theta = _wrap_line_angle(theta + scale * noise.sigma_theta * noise_theta)
        y = y + scale * noise.sigma_y * noise_y
    return TactileObs(theta, y)


def visual_obs(chain, gripper: GripperState) -> VisualObs:
    """Top-view readout of the rope to the right of the gripper.

    Particles inside the finger footprint (inflated by the finger radius) are
    occluded. The readout anchors at the lowest-index particle beyond the
    fingers (frame x > finger_radius) that neighbours a held or occluded
    particle; if that particle is itself occluded nothing is visible. The
    visible run of consecutive unoccluded particles sets the confidence and
    feeds the line fit.
    """
    pos = chain.positions
    n = pos.shape[0]
    occluded = footprint_mask(pos, gripper, pad=gripper.finger_radius)
    blocked = occluded | footprint_mask(pos, gripper)
    candidate = (pos[:, 0] - gripper.x) > gripper.finger_radius

    near_blocked = np.zeros(n, dtype=bool)
    near_blocked[:-1] |= blocked[1:]
    near_blocked[1:] |= blocked[:-1]
    starts = np.flatnonzero(candidate & near_blocked)
    if starts.size == 0:
        return VisualObs.nothing()
    s = int(starts[0])
    if occluded[s]:
        return VisualObs.nothing()

    end = s
    while end < n and candidate[end] and not occluded[end]:
        end += 1
    run = end - s
    confidence = min(run / K_CONF, 1.0)
    fit_pts = pos[s:s + min(run, K_CONF)]
    if fit_pts.shape[0] < 2:
        theta, y = 0.0, float(pos[s, 1] - gripper.y)
    else:
        theta, y = fit_line(fit_pts, gripper)
    return VisualObs(1.0, confidence, theta, y)


def kinematic_obs(gripper: GripperState) -> np.ndarray:
    return np.array([gripper.x, gripper.y, gripper.closure], dtype=np.float64)


def assemble_observation(mask: ModalityMask, kin: np.ndarray, tac: TactileObs,
                         vis: VisualObs) -> ObservationVector:
    """Fixed 9-slot vector; slots of masked-out modalities are exactly zero."""
    values = np.zeros(OBS_DIM, dtype=np.float64)
    if mask.kinematic:
        values[KINEMATIC_SLOTS] = kin
    if mask.tactile:
        values[3] = tac.theta
        values[4] = tac.y
    if mask.visual:
        values[5] = vis.visible
        values[6] = vis.confidence
        values[7] = vis.theta
        values[8] = vis.y
    return ObservationVector(values, mask)
