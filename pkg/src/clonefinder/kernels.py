"""Backend selection for the edit-distance kernels.

The compiled extension is preferred when importable; setting
``CLONEFINDER_FORCE_PY=1`` forces the pure-Python fallback.  Both backends
expose ``prefix_match(seq, ws, we, j, budget)`` and
``edit_distance(seq, a0, a1, b0, b1, bound)`` with identical results.
"""
from __future__ import annotations

import os

from . import align as _python_backend

try:
    from . import _kernels as _native_backend
except ImportError:
    _native_backend = None


def available_backends() -> list[str]:
    names = ["python"]
    if _native_backend is not None:
        names.insert(0, "native")
    return names


def get_backend(name: str = "auto"):
    """Return the kernel module for *name* ('auto', 'native' or 'python')."""
    if name == "python":
        return _python_backend
    if name == "native":
        if _native_backend is None:
            raise RuntimeError("native kernels are not built; reinstall with Cython available")
        return _native_backend
    if name == "auto":
        if os.environ.get("CLONEFINDER_FORCE_PY") == "1" or _native_backend is None:
            return _python_backend
        return _native_backend
    raise ValueError(f"unknown kernel backend {name!r}")


_default = get_backend("auto")
BACKEND_NAME: str = _default.BACKEND_NAME
prefix_match = _default.prefix_match
edit_distance = _default.edit_distance
