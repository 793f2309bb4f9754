"""Logarithmic mean and entropy-conservative two-point fluxes."""

from __future__ import annotations

import numpy as np

from oftt.eos import EN, MX, PE, PI, RHO, VX, GasParams, _axis_index
from oftt.errors import LogMeanDomainError

#: |a_l/a_r - 1| below which the series branch of the logarithmic mean is used
LOG_MEAN_SWITCH = 1.0e-2


def log_mean(a_l, a_r):
    """Logarithmic mean ``(a_r - a_l)/(ln a_r - ln a_l)``.

    Near equal arguments the quotient is replaced by its expansion in
    ``u = ((z - 1)/(z + 1))**2`` with ``z = a_l/a_r``, which is accurate to
    round-off for ``|z - 1| < LOG_MEAN_SWITCH``.
    """
    a_l = np.asarray(a_l, dtype=float)
    a_r = np.asarray(a_r, dtype=float)
    if np.any(a_l <= 0) or np.any(a_r <= 0) or not (np.all(np.isfinite(a_l)) and np.all(np.isfinite(a_r))):
        raise LogMeanDomainError("logarithmic mean requires finite positive arguments")
    z = a_l / a_r
    f = (z - 1.0) / (z + 1.0)
    u = f * f
    near = np.abs(z - 1.0) < LOG_MEAN_SWITCH
    series = 1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0 + u / 9.0)))
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.log(z) / (2.0 * f)
    F = np.where(near, series, direct)
    out = 0.5 * (a_l + a_r) / F
    return out[()] if out.ndim == 0 else out


def ec_flux(Wl, Wr, g: GasParams, d="x"):
    """Two-point entropy-conservative flux between primitive states ``Wl`` and ``Wr``.

    Satisfies ``[[V]] . f = [[2 rho v_d]]`` and reduces to
    :func:`oftt.eos.physical_flux` for equal states. The ion-pressure term in
    the energy component enters as ``f5/(gamma_i - 1)``, the coefficient that
    makes the flux consistent.
    """
    Wl = np.asarray(Wl, dtype=float)
    Wr = np.asarray(Wr, dtype=float)
    a = _axis_index(d)
    ge, gi = g.gamma_e, g.gamma_i

    rho_l, rho_r = Wl[..., RHO], Wr[..., RHO]
    be_l, be_r = rho_l / Wl[..., PE], rho_r / Wr[..., PE]
    bi_l, bi_r = rho_l / Wl[..., PI], rho_r / Wr[..., PI]
    vx = 0.5 * (Wl[..., VX] + Wr[..., VX])
    vy = 0.5 * (Wl[..., VX + 1] + Wr[..., VX + 1])
    v2 = 0.5 * (
        Wl[..., VX] ** 2 + Wl[..., VX + 1] ** 2 + Wr[..., VX] ** 2 + Wr[..., VX + 1] ** 2
    )
    vn = vx if a == 0 else vy

    rho_ln = log_mean(rho_l, rho_r)
    be_ln = log_mean(be_l, be_r)
    bi_ln = log_mean(bi_l, bi_r)
    p_hat = 2.0 * 0.5 * (rho_l + rho_r) / (0.5 * (be_l + be_r))

    f = np.empty(np.broadcast_shapes(Wl.shape, Wr.shape))
    f1 = rho_ln * vn
    f[..., RHO] = f1
    f[..., MX] = vx * f1
    f[..., MX + 1] = vy * f1
    f[..., MX + a] += p_hat
    f[..., PI] = f1 / bi_ln
    f[..., EN] = (
        (1.0 / ((ge - 1.0) * be_ln) - 0.5 * v2) * f1
        + vx * f[..., MX]
        + vy * f[..., MX + 1]
        + f[..., PI] / (gi - 1.0)
    )
    return f


def ec_flux4(W, g: GasParams, d="x"):
    """Fourth-order entropy-conservative flux at the centre of a 4-state stencil.

    ``W[..., 0:4, :]`` holds states ``i-1, i, i+1, i+2``; the result sits at ``i+1/2``.
    """
    W = np.asarray(W, dtype=float)
    wm, w0, w1, w2 = (W[..., j, :] for j in range(4))
    return (4.0 / 3.0) * ec_flux(w0, w1, g, d) - (1.0 / 6.0) * (
        ec_flux(wm, w1, g, d) + ec_flux(w0, w2, g, d)
    )
