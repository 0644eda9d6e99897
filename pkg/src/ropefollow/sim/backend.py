"""Kernel backend selection: compiled extension if available, pure Python otherwise.

Set ``ROPEFOLLOW_PURE_PY=1`` to force the fallback (used by the backend-parity
tests and the kernel benchmark).
"""
import os

if os.environ.get("ROPEFOLLOW_PURE_PY"):
    from . import _core_py as kernels
else:
    try:
        from . import _core as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as kernels

COMPILED: bool = kernels.COMPILED
