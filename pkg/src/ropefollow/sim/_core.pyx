# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled projection kernels for the planar rope chain.

Mirrors ``_core_py`` operation for operation; built with -ffp-contract=off so
both backends stay bit-identical.
"""
from libc.math cimport sqrt

import numpy as np

COMPILED = True

cdef double _EPS_DIST = 1e-12


cdef int _sweep(double[:, ::1] pos, double[::1] inv_mass, double rest,
                int stride, double k) noexcept nogil:
    cdef int n = pos.shape[0]
    cdef int skipped = 0
    cdef int i, j
    cdef double wi, wj, wsum, dx, dy, dist, s, cx, cy
    for i in range(n - stride):
        j = i + stride
        wi = inv_mass[i]
        wj = inv_mass[j]
        wsum = wi + wj
        if wsum == 0.0:
            continue
        dx = pos[j, 0] - pos[i, 0]
        dy = pos[j, 1] - pos[i, 1]
        dist = sqrt(dx * dx + dy * dy)
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


def project_distance(double[:, ::1] pos, double[::1] inv_mass, double rest,
                     int stride, double k, int iterations):
    cdef int skipped = 0
    cdef int it
    with nogil:
        for it in range(iterations):
            skipped += _sweep(pos, inv_mass, rest, stride, k)
    return skipped


def step_once(double[:, ::1] pos, double[:, ::1] vel, double[::1] inv_mass,
              double rest, double k_stretch, double k_bend, int iterations,
              double dt, double friction_decel, double damping):
    cdef int n = pos.shape[0]
    cdef double ks = k_stretch if k_stretch < 1.0 else 1.0
    cdef double kb = k_bend
    if kb < 0.0:
        kb = 0.0
    if kb > 1.0:
        kb = 1.0

    old_arr = np.empty((n, 2), dtype=np.float64)
    cdef double[:, ::1] old = old_arr

    cdef int skipped = 0
    cdef int i, it
    cdef double fd = friction_decel * dt
    cdef double keep = 1.0 - damping
    cdef double vx, vy, speed, factor

    with nogil:
        for i in range(n):
            old[i, 0] = pos[i, 0]
            old[i, 1] = pos[i, 1]
            pos[i, 0] += vel[i, 0] * dt
            pos[i, 1] += vel[i, 1] * dt

        for it in range(iterations):
            skipped += _sweep(pos, inv_mass, rest, 1, ks)
            if n >= 3:
                skipped += _sweep(pos, inv_mass, 2.0 * rest, 2, kb)

        for i in range(n):
            vx = (pos[i, 0] - old[i, 0]) / dt
            vy = (pos[i, 1] - old[i, 1]) / dt
            speed = sqrt(vx * vx + vy * vy)
            if speed > 0.0:
                factor = 1.0 - fd / speed
                if factor < 0.0:
                    factor = 0.0
                vx *= factor
                vy *= factor
            vel[i, 0] = vx * keep
            vel[i, 1] = vy * keep

    return skipped
