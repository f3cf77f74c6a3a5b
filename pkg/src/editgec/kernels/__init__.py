"""Kernel selection: compiled extension when available, pure Python otherwise.

Set EDITGEC_PURE=1 to force the fallback (used by the parity tests and the
benchmark).
"""

import os

if os.environ.get("EDITGEC_PURE"):
    from . import fallback as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import fallback as _impl

BACKEND = _impl.BACKEND
distance = _impl.distance
norm_distance = _impl.norm_distance
norm_distance_matrix = _impl.norm_distance_matrix
char_align_steps = _impl.align

def _speedups_available():
    try:
        from . import _speedups  # noqa: F401
    except ImportError:
        return False
    return True


__all__ = [
    "BACKEND",
    "distance",
    "norm_distance",
    "norm_distance_matrix",
    "char_align_steps",
]
