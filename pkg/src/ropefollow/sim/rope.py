"""Planar position-based-dynamics rope: a particle chain with stretch and bend
constraints, ground friction, and an anchored first particle.

The rope lives in the top-view plane. Stretch constraints keep adjacent
particles ``rest_seg`` apart; bend constraints prefer straightness by keeping
particles two apart at ``2 * rest_seg``. Constraint projection splits each
correction by inverse mass, so zero-inverse-mass particles (the anchor, fully
gripped particles) never move.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigurationError
from .backend import kernels

# Normal-force proxy for ground friction (m/s^2): the plane is horizontal, so
# deceleration per second is friction * G_EFF.
G_EFF = 9.81


@dataclass(frozen=True)
class RopeParams:
    """Static rope properties; stiffnesses are per-iteration projection scales."""

    n_particles: int
    length: float
    k_stretch: float = 1.0
    k_bend: float = 1.0
    friction: float = 0.1
    nominal_inv_mass: float = 1.0

    @property
    def rest_seg(self) -> float:
        return self.length / (self.n_particles - 1)

    def validate(self) -> "RopeParams":
        if self.n_particles < 2:
            raise ConfigurationError(f"need at least 2 particles, got {self.n_particles}")
        if not self.length > 0:
            raise ConfigurationError(f"rope length must be positive, got {self.length}")
        if not self.nominal_inv_mass > 0:
            raise ConfigurationError(f"nominal inverse mass must be positive, got {self.nominal_inv_mass}")
        if self.k_stretch < 0 or self.k_bend < 0:
            raise ConfigurationError("stiffnesses must be non-negative")
        if self.friction < 0:
            raise ConfigurationError(f"friction must be non-negative, got {self.friction}")
        return self


@dataclass(frozen=True)
class SimConfig:
    dt: float = 0.01
    solver_iterations: int = 20
    damping: float = 0.02

    def validate(self) -> "SimConfig":
        if not self.dt > 0:
            raise ConfigurationError(f"dt must be positive, got {self.dt}")
        if self.solver_iterations < 1:
            raise ConfigurationError("solver_iterations must be >= 1")
        if not 0.0 <= self.damping <= 1.0:
            raise ConfigurationError(f"damping must be in [0, 1], got {self.damping}")
        return self


@dataclass
class ParticleChain:
    """Mutable rope state. Arrays are (n, 2) / (n,) float64, C-contiguous."""

    positions: np.ndarray
    velocities: np.ndarray
    inv_mass: np.ndarray
    params: RopeParams
    skipped_constraints: int = 0  # coincident-particle projections skipped so far

    @property
    def n(self) -> int:
        return self.params.n_particles

    def copy(self) -> "ParticleChain":
        return ParticleChain(
            self.positions.copy(), self.velocities.copy(), self.inv_mass.copy(),
            self.params, self.skipped_constraints,
        )


def build_rope(params: RopeParams, anchor=(0.0, 0.0)) -> ParticleChain:
    """Straight chain along +x from the anchor, at rest, first particle pinned."""
    params.validate()
    n = params.n_particles
    positions = np.zeros((n, 2), dtype=np.float64)
    positions[:, 0] = anchor[0] + np.arange(n) * params.rest_seg
    positions[:, 1] = anchor[1]
    velocities = np.zeros((n, 2), dtype=np.float64)
    inv_mass = np.full(n, params.nominal_inv_mass, dtype=np.float64)
    inv_mass[0] = 0.0
    return ParticleChain(positions, velocities, inv_mass, params)


def solve_stretch(chain: ParticleChain, k_stretch: float | None = None,
                  iterations: int = 1) -> ParticleChain:
    """Project adjacent pairs toward rest_seg; stiffness capped at 1 per pass."""
    k = chain.params.k_stretch if k_stretch is None else k_stretch
    k = min(k, 1.0)
    chain.skipped_constraints += kernels.project_distance(
        chain.positions, chain.inv_mass, chain.params.rest_seg, 1, k, iterations)
    return chain


def solve_bend(chain: ParticleChain, k_bend: float | None = None,
               iterations: int = 1) -> ParticleChain:
    """Project (i, i+2) pairs toward 2*rest_seg; no-op below 3 particles."""
    if chain.n < 3:
        return chain
    k = chain.params.k_bend if k_bend is None else k_bend
    k = min(max(k, 0.0), 1.0)
    chain.skipped_constraints += kernels.project_distance(
        chain.positions, chain.inv_mass, 2.0 * chain.params.rest_seg, 2, k, iterations)
    return chain


def sim_step(chain: ParticleChain, cfg: SimConfig) -> ParticleChain:
    """One substep: predict, interleaved stretch/bend passes, velocity update,
    Coulomb-style ground friction, global damping."""
    p = chain.params
    chain.skipped_constraints += kernels.step_once(
        chain.positions, chain.velocities, chain.inv_mass,
        p.rest_seg, p.k_stretch, p.k_bend, cfg.solver_iterations,
        cfg.dt, p.friction * G_EFF, cfg.damping,
    )
    if not np.isfinite(chain.positions).all():
        raise FloatingPointError("non-finite particle positions: solver diverged")
    return chain


def segment_lengths(chain: ParticleChain) -> np.ndarray:
    deltas = np.diff(chain.positions, axis=0)
    return np.sqrt((deltas * deltas).sum(axis=1))


def kinetic_energy(chain: ParticleChain) -> float:
    """0.5 * sum(m * |v|^2) over movable particles."""
    w = chain.inv_mass
    movable = w > 0
    v2 = (chain.velocities[movable] ** 2).sum(axis=1)
    return float(0.5 * (v2 / w[movable]).sum())
