"""Kernel backend selection: numba-jitted loops or pure-numpy vectorization.

The hot inner loops (Laguerre recurrences over node arrays, structured
twisted sphere means) exist in two implementations with identical
signatures: ``twistmeans._kernels_numba`` and ``twistmeans._kernels_numpy``.
The active one is chosen by the environment variable ``TWISTMEANS_BACKEND``
(``"numba"`` or ``"numpy"``; default is numba when it imports, numpy
otherwise) and can be overridden at runtime with :func:`set_backend`.
"""

from __future__ import annotations

import os
import warnings

_VALID = ("numba", "numpy")
_forced: str | None = None
_active_name: str | None = None
_active_module = None


def _resolve_name() -> str:
    if _forced is not None:
        return _forced
    env = os.environ.get("TWISTMEANS_BACKEND", "").strip().lower()
    if env:
        if env not in _VALID:
            raise ValueError(
                f"TWISTMEANS_BACKEND={env!r}: expected one of {_VALID}"
            )
        return env
    try:
        import numba  # noqa: F401
        return "numba"
    except ImportError:
        return "numpy"


def _load(name: str):
    if name == "numba":
        try:
            from . import _kernels_numba as mod
        except ImportError as exc:
            warnings.warn(
                f"numba backend unavailable ({exc}); falling back to numpy",
                RuntimeWarning,
            )
            from . import _kernels_numpy as mod
            return "numpy", mod
        return "numba", mod
    from . import _kernels_numpy as mod
    return "numpy", mod


def backend_name() -> str:
    """Name of the active kernel backend ("numba" or "numpy")."""
    kernels()
    assert _active_name is not None
    return _active_name


def set_backend(name: str | None) -> None:
    """Force a backend by name; ``None`` restores env/default resolution."""
    global _forced, _active_name, _active_module
    if name is not None and name not in _VALID:
        raise ValueError(f"unknown backend {name!r}: expected one of {_VALID}")
    _forced = name
    _active_name = None
    _active_module = None


def kernels():
    """Return the active kernel module."""
    global _active_name, _active_module
    if _active_module is None:
        _active_name, _active_module = _load(_resolve_name())
    return _active_module
