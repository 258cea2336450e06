"""Kernel backend selection.

Two interchangeable implementations of the hot loops exist: a jitted one
(numba_impl) and a plain-numpy reference (numpy_impl).  The HAMCONN_KERNEL
environment variable picks one: "numba", "numpy", or "auto" (default,
meaning numba when importable, else numpy).  The choice is made on first
use and cached; call reset() to re-read the environment.
"""

import os
from types import ModuleType

from ..errors import ParameterError

_ACTIVE: ModuleType | None = None


def load(name: str) -> ModuleType:
    """Import a backend by name, bypassing the cached selection."""
    if name == "numba":
        from . import numba_impl

        return numba_impl
    if name == "numpy":
        from . import numpy_impl

        return numpy_impl
    raise ParameterError(f"unknown kernel backend {name!r} (use numba or numpy)")


def backend() -> ModuleType:
    """The active kernel module, selected via HAMCONN_KERNEL on first call."""
    global _ACTIVE
    if _ACTIVE is None:
        choice = os.environ.get("HAMCONN_KERNEL", "auto").strip().lower()
        if choice == "auto":
            try:
                _ACTIVE = load("numba")
            except ImportError:
                _ACTIVE = load("numpy")
        else:
            _ACTIVE = load(choice)
    return _ACTIVE


def backend_name() -> str:
    return backend().NAME


def reset() -> None:
    global _ACTIVE
    _ACTIVE = None
