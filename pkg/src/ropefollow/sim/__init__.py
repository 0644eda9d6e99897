from .backend import COMPILED
from .rope import (
    G_EFF,
    ParticleChain,
    RopeParams,
    SimConfig,
    build_rope,
    kinetic_energy,
    segment_lengths,
    sim_step,
    solve_bend,
    solve_stretch,
)

__all__ = [
    "COMPILED", "G_EFF", "ParticleChain", "RopeParams", "SimConfig",
    "build_rope", "kinetic_energy", "segment_lengths", "sim_step",
    "solve_bend", "solve_stretch",
]
