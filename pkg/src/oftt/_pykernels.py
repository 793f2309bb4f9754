"""Vectorised numpy implementation of the line sweep.

This is the reference backend; the compiled kernel in ``_ckernels`` must
agree with it to round-off.
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from oftt.eigen import interface_eigs
from oftt.eos import GasParams, cons_to_prim, entropy_potential, entropy_vars
from oftt.fluxes import ec_flux
from oftt.noncons import central_diff_line, noncons_matrix
from oftt.reconstruction import scale, scaled_jump_from_w, stencil_width


def _pair(W, V, F, a, b, g):
    """EC flux and its entropy flux between cell slices ``a`` and ``b``."""
    f = ec_flux(W[:, a], W[:, b], g, "x")
    q = 0.5 * np.einsum("...i,...i->...", V[:, a] + V[:, b], f) - 0.5 * (F[:, a] + F[:, b])
    return f, q


def sweep(U, g: GasParams, k: int, h: float, ghost: int, dissipation: float = 1.0, recon: int | None = None):
    """Interface fluxes, entropy fluxes and non-conservative products along x-lines.

    ``U`` has shape ``(lines, n + 2*ghost, 5)``. Returns ``fhat (lines, n+1, 5)``,
    ``qhat (lines, n+1)`` and ``nc (lines, n, 5)`` where ``nc`` is already
    divided by ``h``.
    """
    U = np.asarray(U, dtype=float)
    L, N, _ = U.shape
    n = N - 2 * ghost
    recon = k if recon is None else recon
    W = cons_to_prim(U, g, check=False)
    V = entropy_vars(W, g)
    F = entropy_potential(W, "x")

    G = ghost
    sl = slice(G - 1, G + n)
    sr = slice(G, G + n + 1)
    f, q = _pair(W, V, F, sl, sr, g)
    if k >= 3:
        f_a, q_a = _pair(W, V, F, slice(G - 2, G + n - 1), sr, g)
        f_b, q_b = _pair(W, V, F, sl, slice(G + 1, G + n + 2), g)
        f = (4.0 / 3.0) * f - (1.0 / 6.0) * (f_a + f_b)
        q = (4.0 / 3.0) * q - (1.0 / 6.0) * (q_a + q_b)

    if dissipation != 0.0:
        Wl, Wr = W[:, sl], W[:, sr]
        R, lam = interface_eigs(Wl, Wr, g, "x")
        S = stencil_width(recon)
        hw = S // 2
        Vwin = sliding_window_view(V[:, G - hw : G + n + hw], S, axis=1)  # (L, n+1, 5, S)
        w = scale(np.swapaxes(Vwin, -1, -2), R)
        jump = scaled_jump_from_w(w, recon)
        Rs = np.einsum("...ij,...j->...i", R, jump)
        f = f - 0.5 * dissipation * lam[..., None] * Rs
        Vbar = 0.5 * (V[:, sl] + V[:, sr])
        q = q - 0.5 * dissipation * lam * np.einsum("...i,...i->...", Vbar, Rs)

    order = 2 if k == 2 else 4
    r = order // 2
    dU = central_diff_line(U[:, G - r : G + n + r], order, h)
    C = noncons_matrix(W[:, G : G + n], g, "x")
    nc = np.einsum("...ij,...j->...i", C, dU)
    return f, q, nc


def max_speed_sum(U, g: GasParams, inv_dx: float, inv_dy: float):
    """``max(lam_x/dx + lam_y/dy)`` over cells, with the larger of the two sound speeds."""
    W = cons_to_prim(U, g, check=False)
    rho, vx, vy, pe, pi = (W[..., j] for j in range(5))
    c_full = np.sqrt((g.gamma_e * pe + g.gamma_i * pi) / rho)
    c_cons = np.sqrt(2.0 * pe * (2.0 * g.gamma_e - 1.0) / rho)
    c = np.maximum(c_full, c_cons)
    s = (np.abs(vx) + c) * inv_dx
    if inv_dy:
        s = s + (np.abs(vy) + c) * inv_dy
    return float(np.max(s))
