"""Wave speeds, entropy-scaled eigenvectors and the Rusanov-type dissipation.

The scaled eigenvector matrix ``R`` satisfies ``R @ R.T == dU/dV`` so that
``D = R @ (lam * I) @ R.T`` is a symmetric positive semidefinite dissipation
acting on entropy-variable jumps.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from oftt.eos import (
    SWAP_XY,
    GasParams,
    _axis_index,
    cons_to_prim,
    entropy_vars,
    physical_flux,
    prim_to_cons,
    sound_speed_cons,
    sound_speed_full,
)
from oftt.noncons import noncons_matrix


class ScaledEigs(NamedTuple):
    R_tilde: np.ndarray
    lam_max: np.ndarray


def _speeds(W, c, d):
    W = np.asarray(W, dtype=float)
    vn = W[..., 1 + _axis_index(d)]
    out = np.empty(W.shape[:-1] + (5,))
    out[..., 0] = vn - c
    out[..., 1:4] = vn[..., None]
    out[..., 4] = vn + c
    return out


def wave_speeds_full(W, g: GasParams, d="x"):
    """Eigenvalues of the complete (non-conservative) system."""
    return _speeds(W, sound_speed_full(W, g), d)


def wave_speeds_cons(W, g: GasParams, d="x"):
    """Eigenvalues of the Jacobian of the conservative flux alone."""
    return _speeds(W, sound_speed_cons(W, g), d)


def dU_dW(W, g: GasParams):
    W = np.asarray(W, dtype=float)
    rho, vx, vy = W[..., 0], W[..., 1], W[..., 2]
    J = np.zeros(W.shape + (5,))
    J[..., 0, 0] = 1.0
    J[..., 1, 0] = vx
    J[..., 1, 1] = rho
    J[..., 2, 0] = vy
    J[..., 2, 2] = rho
    J[..., 3, 0] = 0.5 * (vx * vx + vy * vy)
    J[..., 3, 1] = rho * vx
    J[..., 3, 2] = rho * vy
    J[..., 3, 3] = 1.0 / (g.gamma_e - 1.0)
    J[..., 3, 4] = 1.0 / (g.gamma_i - 1.0)
    J[..., 4, 4] = 1.0
    return J


def _theta(W, g: GasParams):
    W = np.asarray(W, dtype=float)
    rho, pi = W[..., 0], W[..., 4]
    ge, gi = g.gamma_e, g.gamma_i
    th1 = np.sqrt((ge - 1.0) * (gi - 1.0) * (2.0 * ge - 1.0))
    arg = (2.0 * pi * rho * th1 - pi * pi * (ge + gi - 2.0 * ge * gi) + rho * rho * (ge - 1.0)) / (
        rho * (2.0 * ge - 1.0)
    )
    if np.any(~(arg > 0)):
        raise FloatingPointError("eigenvector scaling: radicand of Theta is not positive")
    return th1, np.sqrt(arg)


def scaled_eigenvectors_prim(W, g: GasParams, d="x"):
    """Entropy-scaled right eigenvectors expressed in primitive variables.

    Columns are ordered by eigenvalue ``(v-c, v, v, v, v+c)``.
    """
    W = np.asarray(W, dtype=float)
    rho, pe, pi = W[..., 0], W[..., 3], W[..., 4]
    ge, gi = g.gamma_e, g.gamma_i
    g2 = 2.0 * ge - 1.0
    th1, th = _theta(W, g)

    a = np.sqrt(rho / (4.0 * g2))
    b = np.sqrt(0.5 * pe) / rho
    t22 = (pi * th1 + rho * (ge - 1.0)) / (g2 * th)
    t24 = pi * (ge - 1.0) / (g2 * th)
    t44 = (pi * pi * (ge * (2.0 * gi - 1.0) - gi) + pi * rho * th1) / (rho * g2 * th)
    r4 = 0.5 * pe * np.sqrt(g2 / rho)
    r5 = 0.5 * pi / np.sqrt(g2 * rho)

    n = 1 + _axis_index(d)
    t = 3 - n
    R = np.zeros(W.shape + (5,))
    R[..., 0, 0] = a
    R[..., 0, 1] = t22
    R[..., 0, 3] = t24
    R[..., 0, 4] = a
    R[..., n, 0] = -b
    R[..., n, 4] = b
    R[..., t, 2] = np.sqrt(pe) / rho
    R[..., 3, 0] = r4
    R[..., 3, 4] = r4
    R[..., 4, 0] = r5
    R[..., 4, 1] = t24
    R[..., 4, 3] = t44
    R[..., 4, 4] = r5
    return R


def scaled_eigenvectors(W, g: GasParams, d="x") -> ScaledEigs:
    """Scaled eigenvectors in conservative variables and the largest |eigenvalue|."""
    R = dU_dW(W, g) @ scaled_eigenvectors_prim(W, g, d)
    lam = np.max(np.abs(wave_speeds_cons(W, g, d)), axis=-1)
    return ScaledEigs(R, lam)


def interface_eigs(Wl, Wr, g: GasParams, d="x") -> ScaledEigs:
    """Scaled eigenvectors at the arithmetic-mean state of an interface.

    The dissipation speed is the largest conservative-part speed over the two
    end states and the mean state.
    """
    Wl = np.asarray(Wl, dtype=float)
    Wr = np.asarray(Wr, dtype=float)
    Wm = 0.5 * (Wl + Wr)
    R, lam = scaled_eigenvectors(Wm, g, d)
    for w in (Wl, Wr):
        lam = np.maximum(lam, np.max(np.abs(wave_speeds_cons(w, g, d)), axis=-1))
    return ScaledEigs(R, lam)


def diffusion_apply(Wl, Wr, g: GasParams, d, scaled_jump, dissipation: float = 1.0):
    """``R Lambda s`` for a jump ``s`` already expressed in scaled variables.

    Equivalent to ``D @ [[V]]`` with ``D = R Lambda R.T`` whenever
    ``s = R.T @ [[V]]``. ``dissipation`` scales Lambda (0 gives the EC flux).
    """
    R, lam = interface_eigs(Wl, Wr, g, d)
    s = np.asarray(scaled_jump, dtype=float)
    return dissipation * lam[..., None] * np.einsum("...ij,...j->...i", R, s)


def diffusion_matrix(Wl, Wr, g: GasParams, d="x"):
    R, lam = interface_eigs(Wl, Wr, g, d)
    return lam[..., None, None] * (R @ np.swapaxes(R, -1, -2))


# ---------------------------------------------------------------------------
# finite-difference diagnostics (not on the solver path)


def fd_jacobian(fun, x, rel_step: float = 1e-6):
    """Central-difference Jacobian of ``fun`` at the 1D point ``x``."""
    x = np.asarray(x, dtype=float)
    f0 = np.asarray(fun(x))
    J = np.empty((f0.size, x.size))
    for j in range(x.size):
        h = rel_step * max(1.0, abs(x[j]))
        e = np.zeros_like(x)
        e[j] = h
        J[:, j] = (np.asarray(fun(x + e)) - np.asarray(fun(x - e))).ravel() / (2.0 * h)
    return J


def dU_dV_fd(W, g: GasParams):
    """``dU/dV`` as the inverse of a finite-difference ``dV/dU``."""
    U = prim_to_cons(W, g)
    dVdU = fd_jacobian(lambda u: entropy_vars(cons_to_prim(u, g, check=False), g), U)
    return np.linalg.inv(dVdU)


def flux_jacobian_fd(W, g: GasParams, d="x"):
    U = prim_to_cons(W, g)
    return fd_jacobian(lambda u: physical_flux(cons_to_prim(u, g, check=False), g, d), U)


def symmetrizability_defect(W, g: GasParams):
    """``H - H.T`` with ``H = (df_x/dU + C_x) dU/dV``, from finite differences.

    Vanishes when ``p_e == p_i``; otherwise the full system is not
    symmetrized by the entropy variables.
    """
    W = np.asarray(W, dtype=float)
    H = (flux_jacobian_fd(W, g, "x") + noncons_matrix(W, g, "x")) @ dU_dV_fd(W, g)
    return H - H.T


def symmetrizability_defect_closed_form(W, g: GasParams):
    rho, vx, vy, pe, pi = (float(c) for c in np.asarray(W, dtype=float))
    ge, gi = g.gamma_e, g.gamma_i
    d = pe - pi
    G = (
        d
        * (-2.0 * pe * (gi - 1.0) + (ge - 1.0) * (2.0 * pi * (1.0 - 2.0 * gi) + rho * (vx * vx - vy * vy) * (gi - 1.0)))
        / (4.0 * rho * (ge - 1.0) * (gi - 1.0))
    )
    z = d * pi * (2.0 * gi - 1.0) / (2.0 * rho)
    return np.array(
        [
            [0.0, d / 2, 0.0, d * vx / 2, 0.0],
            [-d / 2, 0.0, -d * vy / 2, G, -z],
            [0.0, d * vy / 2, 0.0, d * vx * vy / 2, 0.0],
            [-d * vx / 2, -G, -d * vx * vy / 2, 0.0, -z * vx],
            [0.0, z, 0.0, z * vx, 0.0],
        ]
    )


def swap_xy(A):
    """Exchange the x and y components along the last axis."""
    return np.asarray(A)[..., SWAP_XY]
