"""Thermodynamic closure and entropy pair of the two-temperature Euler model.

State arrays carry their five components on the last axis:

* conserved ``U = (rho, rho*vx, rho*vy, E, p_i)``
* primitive ``W = (rho, vx, vy, p_e, p_i)``
* entropy variables ``V = dEnt/dU``

Every function broadcasts over leading axes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from oftt.errors import AdmissibilityError

RHO, VX, VY, PE, PI = 0, 1, 2, 3, 4
MX, MY, EN = 1, 2, 3

#: component permutation exchanging the roles of x and y
SWAP_XY = np.array([0, 2, 1, 3, 4])


@dataclass(frozen=True)
class GasParams:
    """Specific-heat ratios for the electron and ion species."""

    gamma_e: float = 1.4
    gamma_i: float = 1.4

    def __post_init__(self):
        if not (self.gamma_e > 1.0 and self.gamma_i > 1.0):
            raise ValueError(
                f"specific-heat ratios must exceed 1, got {self.gamma_e}, {self.gamma_i}"
            )


def _axis_index(d) -> int:
    if d in ("x", 0):
        return 0
    if d in ("y", 1):
        return 1
    raise ValueError(f"direction must be 'x' or 'y', got {d!r}")


def check_admissible(W, where: str = "state") -> None:
    """Raise :class:`AdmissibilityError` unless ``rho, p_e, p_i > 0`` everywhere.

    The error carries the index of the first offending state.
    """
    W = np.asarray(W, dtype=float)
    bad = ~((W[..., RHO] > 0) & (W[..., PE] > 0) & (W[..., PI] > 0))
    if np.any(bad):
        idx = tuple(int(i) for i in np.argwhere(bad)[0])
        w = W[idx] if idx else W
        raise AdmissibilityError(
            f"inadmissible {where} at index {idx}: "
            f"rho={w[RHO]:.6g}, pe={w[PE]:.6g}, pi={w[PI]:.6g}",
            index=idx,
        )


def prim_to_cons(W, g: GasParams, check: bool = True):
    W = np.asarray(W, dtype=float)
    if check:
        check_admissible(W, "primitive state")
    rho, vx, vy, pe, pi = (W[..., k] for k in range(5))
    U = np.empty_like(W)
    U[..., RHO] = rho
    U[..., MX] = rho * vx
    U[..., MY] = rho * vy
    U[..., EN] = pe / (g.gamma_e - 1.0) + pi / (g.gamma_i - 1.0) + 0.5 * rho * (vx * vx + vy * vy)
    U[..., PI] = pi
    return U


def cons_to_prim(U, g: GasParams, check: bool = True):
    """Invert :func:`prim_to_cons`; the electron pressure is recovered from ``E``."""
    U = np.asarray(U, dtype=float)
    rho = U[..., RHO]
    W = np.empty_like(U)
    with np.errstate(divide="ignore", invalid="ignore"):
        vx = U[..., MX] / rho
        vy = U[..., MY] / rho
    W[..., RHO] = rho
    W[..., VX] = vx
    W[..., VY] = vy
    W[..., PE] = (g.gamma_e - 1.0) * (
        U[..., EN] - 0.5 * rho * (vx * vx + vy * vy) - U[..., PI] / (g.gamma_i - 1.0)
    )
    W[..., PI] = U[..., PI]
    if check:
        check_admissible(W, "conserved state")
    return W


def specific_entropy(W, g: GasParams):
    W = np.asarray(W, dtype=float)
    rho = W[..., RHO]
    ge, gi = g.gamma_e, g.gamma_i
    return (np.log(W[..., PE]) - ge * np.log(rho)) / (ge - 1.0) + (
        np.log(W[..., PI]) - gi * np.log(rho)
    ) / (gi - 1.0)


def physical_entropy(W, g: GasParams):
    """Return ``(s, Ent)`` with ``Ent = -rho*s`` the convex mathematical entropy."""
    s = specific_entropy(W, g)
    return s, -np.asarray(W, dtype=float)[..., RHO] * s


def entropy_flux(W, g: GasParams, d="x"):
    W = np.asarray(W, dtype=float)
    a = _axis_index(d)
    return -W[..., RHO] * W[..., VX + a] * specific_entropy(W, g)


def entropy_vars(W, g: GasParams):
    W = np.asarray(W, dtype=float)
    rho, vx, vy, pe, pi = (W[..., k] for k in range(5))
    ge, gi = g.gamma_e, g.gamma_i
    be = rho / pe
    bi = rho / pi
    V = np.empty_like(W)
    V[..., 0] = (
        ge / (ge - 1.0) + gi / (gi - 1.0) - specific_entropy(W, g) - 0.5 * be * (vx * vx + vy * vy)
    )
    V[..., 1] = be * vx
    V[..., 2] = be * vy
    V[..., 3] = -be
    V[..., 4] = (be - bi) / (gi - 1.0)
    return V


def entropy_potential(W, d="x"):
    """Entropy potential ``V.f_d - q_d``, which for this model reduces to ``2*rho*v_d``."""
    W = np.asarray(W, dtype=float)
    return 2.0 * W[..., RHO] * W[..., VX + _axis_index(d)]


def physical_flux(W, g: GasParams, d="x"):
    """Flux of the conservative part of the reformulated system.

    The momentum and energy fluxes carry ``2*p_e`` in place of the total
    pressure; the remainder ``p_e - p_i`` lives in the non-conservative term.
    """
    W = np.asarray(W, dtype=float)
    a = _axis_index(d)
    rho, vx, vy, pe, pi = (W[..., k] for k in range(5))
    vn = W[..., VX + a]
    E = pe / (g.gamma_e - 1.0) + pi / (g.gamma_i - 1.0) + 0.5 * rho * (vx * vx + vy * vy)
    f = np.empty_like(W)
    f[..., RHO] = rho * vn
    f[..., MX] = rho * vx * vn
    f[..., MY] = rho * vy * vn
    f[..., MX + a] += 2.0 * pe
    f[..., EN] = (E + 2.0 * pe) * vn
    f[..., PI] = pi * vn
    return f


def sound_speed_full(W, g: GasParams):
    """Fast magnetosonic-like speed of the full system, ``sqrt((ge*pe + gi*pi)/rho)``."""
    W = np.asarray(W, dtype=float)
    return np.sqrt((g.gamma_e * W[..., PE] + g.gamma_i * W[..., PI]) / W[..., RHO])


def sound_speed_cons(W, g: GasParams):
    """Sound speed of the conservative part alone, ``sqrt(2*pe*(2*ge - 1)/rho)``."""
    W = np.asarray(W, dtype=float)
    return np.sqrt(2.0 * W[..., PE] * (2.0 * g.gamma_e - 1.0) / W[..., RHO])
