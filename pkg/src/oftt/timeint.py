"""CFL time step and explicit SSP Runge-Kutta integrators in Shu-Osher form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from oftt import kernels
from oftt.eos import GasParams
from oftt.errors import AdmissibilityError

CFL_1D = 0.475
CFL_2D = 0.3


@dataclass(frozen=True)
class RKScheme:
    """Stage ``k`` is ``sum_l mu[k][l] U^(l) + nu[k][l] dt L(U^(l))``."""

    order: int
    mu: tuple[tuple[float, ...], ...]
    nu: tuple[tuple[float, ...], ...]

    @property
    def stages(self) -> int:
        return len(self.mu)

    def butcher_weights(self) -> np.ndarray:
        """Effective weights ``b_l`` of ``dt L(U^(l))`` in the final update."""
        s = self.stages
        c = np.zeros((s + 1, s))  # stage k = U^n + dt * sum_l c[k, l] L_l
        for k in range(1, s + 1):
            for l, (m, v) in enumerate(zip(self.mu[k - 1], self.nu[k - 1])):
                c[k] += m * c[l]
                c[k, l] += v
        return c[s]


SSP_RK2 = RKScheme(2, ((1.0,), (0.5, 0.5)), ((1.0,), (0.0, 0.5)))

SSP_RK3 = RKScheme(
    3,
    ((1.0,), (0.75, 0.25), (1.0 / 3.0, 0.0, 2.0 / 3.0)),
    ((1.0,), (0.0, 0.25), (0.0, 0.0, 2.0 / 3.0)),
)

SSP_RK4 = RKScheme(
    4,
    (
        (1.0,),
        (0.44437049406734, 0.55562950593266),
        (0.62010185138540, 0.0, 0.37989814861460),
        (0.17807995410773, 0.0, 0.0, 0.82192004589227),
        (0.00683325884039, 0.0, 0.51723167208978, 0.12759831133288, 0.34833675773694),
    ),
    (
        (0.39175222700392,),
        (0.0, 0.36841059262959),
        (0.0, 0.0, 0.25189177424738),
        (0.0, 0.0, 0.0, 0.54497475021237),
        (0.0, 0.0, 0.0, 0.08460416338212, 0.22600748319395),
    ),
)

SCHEMES = {2: SSP_RK2, 3: SSP_RK3, 4: SSP_RK4}


def rk_scheme(order: int) -> RKScheme:
    try:
        return SCHEMES[order]
    except KeyError:
        raise ValueError(f"SSP-RK order must be 2, 3 or 4, got {order}") from None


def default_cfl(ndim: int) -> float:
    return CFL_1D if ndim == 1 else CFL_2D


def cfl_dt(field, g: GasParams, cfl: float, backend=None) -> float:
    """``cfl / max(lam_x/dx + lam_y/dy)`` with ``lam_d = |v_d| + max(c_full, c_cons)``."""
    if not cfl > 0:
        raise ValueError("cfl must be positive")
    G = field.grid
    s = kernels.max_speed_sum(field.interior, g, 1.0 / G.dx, 1.0 / G.dy if G.ndim == 2 else 0.0, backend)
    if not np.isfinite(s) or s <= 0:
        raise AdmissibilityError(f"non-finite or zero wave speed in CFL computation ({s})")
    return cfl / s


def ssp_rk_step(U, rhs_provider: Callable, dt: float, scheme: RKScheme, check: Callable | None = None, carry=None):
    """Advance ``U`` by one step.

    ``rhs_provider(U)`` returns either ``L`` or a pair ``(L, aux)``; when
    ``carry`` is true the ``aux`` parts (e.g. interface entropy fluxes) are
    combined with the same Shu-Osher weights as the ``dt L`` terms and
    returned, so ``U^{n+1} = U^n + dt * L_eff`` pairs with ``aux_eff``.
    ``check(U, stage)`` may raise to reject an inadmissible stage.
    """
    if not dt > 0:
        raise ValueError("dt must be positive")
    stages = [U]
    Ls = []
    auxs = []
    acc = [None]  # per-stage weighted aux, in the same convex form as U

    def evaluate(l):
        while len(Ls) <= l:
            out = rhs_provider(stages[len(Ls)])
            if carry:
                Ls.append(out[0])
                auxs.append(out[1])
            else:
                Ls.append(out)

    for k in range(1, scheme.stages + 1):
        Uk = None
        ak = None
        for l, (m, v) in enumerate(zip(scheme.mu[k - 1], scheme.nu[k - 1])):
            if m != 0.0:
                Uk = m * stages[l] if Uk is None else Uk + m * stages[l]
                if carry and acc[l] is not None:
                    ak = _axpy(ak, m, acc[l])
            if v != 0.0:
                evaluate(l)
                Uk = (v * dt) * Ls[l] if Uk is None else Uk + (v * dt) * Ls[l]
                if carry:
                    ak = _axpy(ak, v, auxs[l])
        if check is not None:
            try:
                check(Uk, k)
            except AdmissibilityError as err:
                err.stage = k
                raise
        stages.append(Uk)
        acc.append(ak)
    if carry:
        return stages[-1], acc[-1]
    return stages[-1]


def _axpy(acc, a, x):
    if isinstance(x, tuple):
        if acc is None:
            return tuple(None if xi is None else a * xi for xi in x)
        return tuple(None if xi is None else ai + a * xi for ai, xi in zip(acc, x))
    return a * x if acc is None else acc + a * x
