"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``NORMALTILING_PURE_PYTHON`` is set to a non-empty
value other than ``0``, the pure-Python versions are used. ``BACKEND``
names the active choice.
"""
import os

from . import _kernels_py

_force_py = os.environ.get("NORMALTILING_PURE_PYTHON", "") not in ("", "0")

try:
    if _force_py:
        raise ImportError("pure Python backend requested")
    from . import _kernels as _impl
    BACKEND = "compiled"
except ImportError:
    _impl = _kernels_py
    BACKEND = "python"

bfs_distances = _impl.bfs_distances
ball_degrees = _impl.ball_degrees
grow_ring = _impl.grow_ring
layout_energy_grad = _impl.layout_energy_grad


def backends():
    """Mapping of available backend name to module, for tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
