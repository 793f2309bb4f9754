"""Backend selection for the line-sweep kernel.

The compiled extension is used when it imports; otherwise the numpy
implementation in :mod:`oftt._pykernels` is used. Both produce the same
numbers to round-off, so the choice never changes results beyond that.
"""

from __future__ import annotations

import numpy as np

from oftt import _pykernels
from oftt.eos import GasParams

try:  # pragma: no cover - depends on the build
    from oftt import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

BACKENDS = ("cython", "python")
_active = "cython" if _ckernels is not None else "python"


def available_backends() -> tuple[str, ...]:
    return tuple(b for b in BACKENDS if b == "python" or _ckernels is not None)


def get_backend() -> str:
    return _active


def set_backend(name: str) -> str:
    """Select ``'cython'`` or ``'python'``; returns the previous backend."""
    global _active
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choose from {BACKENDS}")
    if name == "cython" and _ckernels is None:
        raise RuntimeError("compiled kernels are not built; reinstall the package with a C compiler")
    prev, _active = _active, name
    return prev


def sweep(U, g: GasParams, k: int, h: float, ghost: int, dissipation: float = 1.0, recon=None, backend=None):
    backend = backend or _active
    if backend == "cython":
        U = np.ascontiguousarray(U, dtype=np.float64)
        return _ckernels.sweep(
            U, g.gamma_e, g.gamma_i, int(k), float(h), int(ghost), float(dissipation),
            int(k if recon is None else recon),
        )
    return _pykernels.sweep(U, g, k, h, ghost, dissipation, recon)


def max_speed_sum(U, g: GasParams, inv_dx: float, inv_dy: float, backend=None):
    backend = backend or _active
    if backend == "cython":
        U = np.ascontiguousarray(U, dtype=np.float64).reshape(-1, 5)
        return _ckernels.max_speed_sum(U, g.gamma_e, g.gamma_i, float(inv_dx), float(inv_dy))
    return _pykernels.max_speed_sum(U, g, inv_dx, inv_dy)
