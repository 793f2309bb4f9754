"""Non-conservative coefficient matrices and the central differences that feed them."""

from __future__ import annotations

import numpy as np

from oftt.eos import GasParams, _axis_index, cons_to_prim

_CENTRAL = {
    2: np.array([-0.5, 0.0, 0.5]),
    4: np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0,
}


def noncons_matrix(W, g: GasParams, d="x"):
    """Matrix ``C_d(U)`` multiplying ``dU/dd`` in the reformulated system.

    Only the normal-momentum, energy and ion-pressure rows are nonzero, and
    ``V(W) @ C_d(W) == 0`` holds identically.
    """
    W = np.asarray(W, dtype=float)
    a = _axis_index(d)
    rho, vx, vy, pe, pi = (W[..., k] for k in range(5))
    ge1 = g.gamma_e - 1.0
    gi1 = g.gamma_i - 1.0
    q = vx * vx + vy * vy
    kk = ge1 / gi1 + 1.0
    dp = (pi - pe) / rho
    vn = vx if a == 0 else vy
    n = 1 + a  # normal momentum row / column

    C = np.zeros(W.shape + (5,))
    C[..., n, 0] = -0.5 * ge1 * q
    C[..., n, 1] = ge1 * vx
    C[..., n, 2] = ge1 * vy
    C[..., n, 3] = -ge1
    C[..., n, 4] = kk
    C[..., 3, 0] = -(0.5 * ge1 * q + dp) * vn
    C[..., 3, 1] = ge1 * vx * vn
    C[..., 3, 2] = ge1 * vy * vn
    C[..., 3, n] += dp
    C[..., 3, 3] = -ge1 * vn
    C[..., 3, 4] = kk * vn
    C[..., 4, 0] = -gi1 * pi * vn / rho
    C[..., 4, n] = gi1 * pi / rho
    return C


def central_diff(samples, order: int, h: float, axis: int = 0):
    """Derivative at the middle sample of ``samples`` along ``axis``.

    ``order`` is 2 or 4; the window must be odd with at least ``order + 1`` samples.
    """
    if order not in _CENTRAL:
        raise ValueError(f"central difference order must be 2 or 4, got {order}")
    samples = np.moveaxis(np.asarray(samples, dtype=float), axis, 0)
    n = samples.shape[0]
    w = _CENTRAL[order]
    if n < w.size or n % 2 == 0:
        raise ValueError(
            f"order-{order} central difference needs an odd window of >= {w.size} samples, got {n}"
        )
    c = n // 2
    r = w.size // 2
    return np.tensordot(w, samples[c - r : c + r + 1], axes=(0, 0)) / h


def central_diff_line(U, order: int, h: float):
    """Central differences at every cell of a ghost-padded line (axis -2 is the line)."""
    w = _CENTRAL[order]
    r = w.size // 2
    n = U.shape[-2] - 2 * r
    out = np.zeros(U.shape[:-2] + (n, U.shape[-1]))
    for j, c in enumerate(w):
        if c != 0.0:
            out += c * U[..., j : j + n, :]
    return out / h


def noncons_term(window, W_center, g: GasParams, order: int, h_x: float, h_y: float | None = None):
    """``C_x dU/dx + C_y dU/dy`` at the centre of a window of conserved states.

    ``window`` has shape ``(wx, wy, 5)``; with ``wy == 1`` (or ``h_y`` None)
    the y contribution is skipped.
    """
    window = np.asarray(window, dtype=float)
    if window.ndim == 2:
        window = window[:, None, :]
    wx, wy = window.shape[:2]
    cx, cy = wx // 2, wy // 2
    out = noncons_matrix(W_center, g, "x") @ central_diff(window[:, cy], order, h_x)
    if wy > 1 and h_y is not None:
        out = out + noncons_matrix(W_center, g, "y") @ central_diff(window[cx, :], order, h_y)
    return out


def noncons_term_from_cons(window, g: GasParams, order: int, h_x: float, h_y: float | None = None):
    window = np.asarray(window, dtype=float)
    if window.ndim == 2:
        window = window[:, None, :]
    center = window[window.shape[0] // 2, window.shape[1] // 2]
    return noncons_term(window, cons_to_prim(center, g), g, order, h_x, h_y)

