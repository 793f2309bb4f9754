"""Sign-preserving reconstruction of scaled entropy variables.

For an interface ``i+1/2`` every cell of the stencil is scaled with the same
matrix, ``w_j = R.T @ V_j``. The reconstructed scaled jump
``w^-_{i+1} - w^+_i`` then has, componentwise, the sign of ``w_{i+1} - w_i``
or vanishes, which keeps the diffusive flux entropy stable.

Values handed to the ENO routines are treated as cell averages; stencils are
picked by the smallest undivided differences, ties going to the left-biased
stencil.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from oftt.eos import GasParams, entropy_vars


def minmod(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.where(a * b > 0.0, np.sign(a) * np.minimum(np.abs(a), np.abs(b)), 0.0)
    return out[()] if out.ndim == 0 else out


@lru_cache(maxsize=None)
def eno_coefficients(degree: int) -> np.ndarray:
    """Interface weights ``c[r + 1, j]`` for a ``degree + 1`` cell stencil.

    With the stencil starting ``r`` cells left of cell ``i``, the right-edge
    value is ``sum_j c[r + 1, j] * w[i - r + j]`` and the left-edge value uses
    row ``r`` (i.e. shift ``r - 1``). Rows span ``r = -1 .. degree``.
    """
    k = degree + 1
    n = np.arange(k)
    rows = []
    for r in range(-1, k):
        cells = np.arange(-r, -r + k)[:, None]
        # cell averages of x**n over [j - 1/2, j + 1/2]
        A = ((cells + 0.5) ** (n + 1) - (cells - 0.5) ** (n + 1)) / (n + 1)
        edge = 0.5 ** n
        rows.append(np.linalg.solve(A.T, edge))
    return np.array(rows)


def _undivided(w, order):
    for _ in range(order):
        w = w[..., 1:, :] - w[..., :-1, :]
    return w


def eno_edges(w, degree: int):
    """ENO edge values for every cell of ``w`` that has a full adaptive stencil.

    ``w`` has the cell axis at -2 and components at -1. Returns ``(left, right)``
    evaluated at ``x_{i-1/2}`` and ``x_{i+1/2}`` for cells ``degree .. n-1-degree``.
    """
    w = np.asarray(w, dtype=float)
    n = w.shape[-2]
    m = degree
    ncell = n - 2 * m
    if ncell <= 0:
        raise ValueError(f"ENO degree {degree} needs at least {2 * degree + 1} samples, got {n}")
    coeff = eno_coefficients(degree)
    shape = w.shape[:-2] + (ncell, w.shape[-1])
    r = np.zeros(shape, dtype=np.intp)
    cell = np.arange(m, n - m)[:, None]
    diffs = [None] + [_undivided(w, l) for l in range(1, m + 1)]
    for l in range(1, m + 1):
        dl = diffs[l]
        # extend left: differences starting at i - r - 1; right: at i - r
        left = np.take_along_axis(dl, cell - r - 1, axis=-2)
        right = np.take_along_axis(dl, cell - r, axis=-2)
        r = r + (np.abs(left) <= np.abs(right))
    vr = np.zeros(shape)
    vl = np.zeros(shape)
    for j in range(m + 1):
        wj = np.take_along_axis(w, cell - r + j, axis=-2)
        vr += coeff[r + 1, j] * wj
        vl += coeff[r, j] * wj
    return vl, vr


def eno_reconstruct(samples, degree: int, cell_index: int, eval_point: str = "right") -> float:
    """ENO value of a degree-``degree`` polynomial for one cell of a scalar sequence."""
    samples = np.asarray(samples, dtype=float)
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if cell_index - degree < 0 or cell_index + degree >= samples.size:
        raise ValueError(
            f"cell {cell_index} needs {degree} samples on each side; sequence has {samples.size}"
        )
    if degree == 0:
        return float(samples[cell_index])
    window = samples[cell_index - degree : cell_index + degree + 1, None]
    vl, vr = eno_edges(window, degree)
    if eval_point == "right":
        return float(vr[0, 0])
    if eval_point == "left":
        return float(vl[0, 0])
    raise ValueError("eval_point must be 'left' or 'right'")


def stencil_width(k: int) -> int:
    """Cells bracketing one interface needed for an order-``k`` scaled jump."""
    return {1: 2, 2: 4, 3: 6, 4: 8}[k]


def scaled_jump_from_w(w, k: int):
    """Reconstructed jump from scaled values on a ``stencil_width(k)`` stencil.

    ``w[..., j, :]`` runs over cells ``i - h + 1 .. i + h`` with ``h = width/2``;
    the interface sits between the two middle cells.
    """
    w = np.asarray(w, dtype=float)
    h = w.shape[-2] // 2
    if w.shape[-2] != stencil_width(k):
        raise ValueError(f"order {k} needs {stencil_width(k)} cells, got {w.shape[-2]}")
    if k == 1:
        return w[..., 1, :] - w[..., 0, :]
    if k == 2:
        wm, w0, w1, w2 = (w[..., j, :] for j in range(4))
        d0 = w1 - w0
        up = w0 + 0.5 * minmod(w0 - wm, d0)
        um = w1 - 0.5 * minmod(d0, w2 - w1)
        return um - up
    vl, vr = eno_edges(w, k - 1)
    return vl[..., 1, :] - vr[..., 0, :]


def scale(V, R_tilde):
    """``R.T @ V_j`` for every cell ``j`` of a stencil sharing one matrix ``R``."""
    return np.einsum("...ab,...ja->...jb", R_tilde, V)


def reconstruct_scaled_jump(stencil, R_tilde, g: GasParams, k: int):
    """Scaled jump at the centre interface of a stencil of primitive states.

    ``k = 1`` gives the unreconstructed jump, ``k = 2`` MinMod, ``k = 3, 4``
    ENO with polynomial degree ``k - 1``.
    """
    V = entropy_vars(stencil, g)
    return scaled_jump_from_w(scale(V, R_tilde), k)
