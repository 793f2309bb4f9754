"""L1 errors, convergence orders and total-entropy bookkeeping."""

from __future__ import annotations

import numpy as np

from oftt.eos import GasParams, cons_to_prim, physical_entropy

COMPONENTS = {"rho": 0, "vx": 1, "vy": 2, "pe": 3, "pi": 4}


def l1_error(f, exact, grid, component="rho", g: GasParams | None = None, normalize: bool = False) -> float:
    """``sum |u - u_exact| dx dy`` over cell centres; ``exact`` is a primitive array.

    ``f`` may be a Field (needs ``g``) or an interior primitive array. With
    ``normalize`` the sum is divided by the domain measure, i.e. the mean
    absolute error over cells.
    """
    j = COMPONENTS[component] if isinstance(component, str) else int(component)
    W = f if isinstance(f, np.ndarray) else f.primitive(g)
    err = float(np.sum(np.abs(W[..., j] - np.asarray(exact)[..., j])) * grid.cell_volume)
    return err / domain_measure(grid) if normalize else err


def domain_measure(grid) -> float:
    return grid.nx * grid.ny * grid.cell_volume


def convergence_order(errors, ratios=2.0) -> np.ndarray:
    """``log(e_coarse/e_fine)/log(ratio)`` for each consecutive pair of levels."""
    e = np.asarray(errors, dtype=float)
    if e.size < 2:
        raise ValueError("need at least two error levels")
    if np.any(e <= 0) or not np.all(np.isfinite(e)):
        raise ValueError("orders are undefined for zero or non-finite errors")
    r = np.broadcast_to(np.asarray(ratios, dtype=float), (e.size - 1,))
    return np.log(e[:-1] / e[1:]) / np.log(r)


def total_entropy(f, g: GasParams) -> float:
    """``sum Ent dx dy`` with ``Ent = -rho s``."""
    W = cons_to_prim(f.interior, g)
    return float(np.sum(physical_entropy(W, g)[1]) * f.grid.cell_volume)


def cell_entropy(U, g: GasParams) -> np.ndarray:
    return physical_entropy(cons_to_prim(U, g, check=False), g)[1]


def total_entropy_change(prev, nxt, flux_ledger, dt: float, grid, g: GasParams) -> float:
    """Fully discrete entropy balance of one step, summed over cells.

    ``sum_ij [Ent^{n+1} - Ent^n + dt/dx (q_{i+1/2} - q_{i-1/2}) + dt/dy (...)]``
    where ``flux_ledger = (qx, qy)`` holds the step's time-weighted interface
    entropy fluxes. Nonpositive for an entropy-stable step; with periodic
    boundaries the flux terms telescope away.
    """
    qx, qy = flux_ledger
    dE = cell_entropy(nxt.interior, g) - cell_entropy(prev.interior, g)
    total = float(np.sum(dE))
    total += dt / grid.dx * float(np.sum(qx[:, -1] - qx[:, 0]))
    if qy is not None:
        total += dt / grid.dy * float(np.sum(qy[:, -1] - qy[:, 0]))
    return total
