"""Time-marching driver with per-step entropy accounting."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from oftt.cases import CaseSpec, get_case, init_case, make_grid
from oftt.diagnostics import total_entropy, total_entropy_change
from oftt.eos import GasParams, cons_to_prim
from oftt.errors import ConfigurationError
from oftt.reconstruction import stencil_width
from oftt.scheme import Field, apply_boundary, rhs_full
from oftt.timeint import cfl_dt, rk_scheme, ssp_rk_step


@dataclass
class RunConfig:
    case: str
    nx: int | None = None
    ny: int | None = None
    order: int = 4
    cfl: float | None = None
    t_final: float | None = None
    ec_only: bool = False
    entropy_log: bool = True
    out: str | None = None
    entropy_log_path: str | None = None
    variant: int | None = None
    backend: str | None = None
    max_steps: int | None = None

    def __post_init__(self):
        if self.order not in (2, 3, 4):
            raise ConfigurationError(f"order must be 2, 3 or 4, got {self.order}")
        need = stencil_width(self.order)
        for n in (self.nx, self.ny):
            if n is not None and n < need:
                raise ConfigurationError(f"resolution {n} is below the order-{self.order} stencil support {need}")
        if self.cfl is not None and not self.cfl > 0:
            raise ConfigurationError("cfl must be positive")
        if self.t_final is not None and not self.t_final > 0:
            raise ConfigurationError("final time must be positive")


@dataclass
class EntropyRecord:
    step: int
    t: float
    dt: float
    total_entropy: float
    entropy_change: float


@dataclass
class EntropyLedger:
    records: list[EntropyRecord] = field(default_factory=list)

    HEADER = ("step", "t", "dt", "total_entropy", "entropy_change_eq25")

    def append(self, *args):
        self.records.append(EntropyRecord(*args))

    @property
    def changes(self) -> np.ndarray:
        return np.array([r.entropy_change for r in self.records])

    @property
    def totals(self) -> np.ndarray:
        return np.array([r.total_entropy for r in self.records])

    def max_change(self) -> float:
        return float(self.changes.max()) if self.records else 0.0

    def write(self, path):
        try:
            with open(path, "w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(self.HEADER)
                for r in self.records:
                    w.writerow([r.step, repr(r.t), repr(r.dt), repr(r.total_entropy), repr(r.entropy_change)])
        except OSError as err:
            raise OSError(f"cannot write entropy log {path}: {err}") from err


@dataclass
class RunResult:
    field: Field
    spec: CaseSpec
    t: float
    steps: int
    ledger: EntropyLedger | None

    def primitive(self) -> np.ndarray:
        return self.field.primitive(self.spec.gas)


def _stage_check(g: GasParams):
    def check(U, stage):
        cons_to_prim(U, g, check=True)

    return check


def integrate(f: Field, g: GasParams, order: int, t_final: float, cfl: float, dissipation: float = 1.0,
              entropy_log: bool = True, backend=None, max_steps: int | None = None,
              callback: Callable | None = None, fixed_dt: float | None = None):
    """March ``f`` to ``t_final``; returns ``(field, t, steps, ledger)``.

    With ``fixed_dt`` the step is fixed (except the final clipped step)
    instead of the CFL value.
    """
    scheme = rk_scheme(order)
    grid = f.grid
    ledger = EntropyLedger() if entropy_log else None
    check = _stage_check(g)
    t = 0.0
    steps = 0
    work = f.copy()
    if ledger is not None:
        ledger.append(0, 0.0, 0.0, total_entropy(work, g), 0.0)

    def provider(Ui):
        work.interior = Ui
        apply_boundary(work)
        res = rhs_full(work, g, order, dissipation, backend=backend)
        return (res.L, (res.qx, res.qy)) if entropy_log else res.L

    while t < t_final * (1 - 1e-14):
        if max_steps is not None and steps >= max_steps:
            break
        apply_boundary(work)
        dt = fixed_dt if fixed_dt is not None else cfl_dt(work, g, cfl, backend)
        if t + dt > t_final:
            dt = t_final - t
        U0 = work.interior.copy()
        prev = work.with_interior(U0) if entropy_log else None
        out = ssp_rk_step(U0, provider, dt, scheme, check=check, carry=entropy_log)
        if entropy_log:
            U1, (qx, qy) = out
        else:
            U1 = out
        work.interior = U1
        apply_boundary(work)
        t = t_final if abs(t + dt - t_final) <= 1e-14 * max(1.0, t_final) else t + dt
        steps += 1
        if ledger is not None:
            change = total_entropy_change(prev, work, (qx, qy), dt, grid, g)
            ledger.append(steps, t, dt, total_entropy(work, g), change)
        if callback is not None:
            callback(work, t, steps)
    return work, t, steps, ledger


def run(config: RunConfig | str, callback: Callable | None = None, **kw) -> RunResult:
    """Initialise a catalog case and march it to its final time."""
    if isinstance(config, str):
        config = RunConfig(config, **kw)
    spec = get_case(config.case, config.variant)
    grid = make_grid(spec, config.nx, config.ny)
    f, spec = init_case(spec, grid)
    cfl = config.cfl if config.cfl is not None else spec.cfl
    t_final = config.t_final if config.t_final is not None else spec.t_final
    out, t, steps, ledger = integrate(
        f, spec.gas, config.order, t_final, cfl, 0.0 if config.ec_only else 1.0,
        config.entropy_log, config.backend, config.max_steps, callback,
    )
    return RunResult(out, spec, t, steps, ledger)


#: base resolutions of the printed convergence tables
CONVERGENCE_BASE = {"accuracy1d_I": 20, "accuracy1d_II": 40, "accuracy2d": 24}
#: components reported per smooth case
CONVERGENCE_COMPONENTS = {"accuracy1d_I": ("rho",), "accuracy1d_II": ("pe", "pi"), "accuracy2d": ("rho",)}


@dataclass
class ConvergenceRow:
    cells: int
    errors: dict
    orders: dict


def convergence_study(case: str, order: int, levels: int, base: int | None = None, normalize: bool = True,
                      backend=None, cfl: float | None = None) -> list[ConvergenceRow]:
    """L1 errors and observed orders on ``levels`` grids doubling from ``base`` cells."""
    from oftt.cases import exact_solution
    from oftt.diagnostics import convergence_order, l1_error

    spec = get_case(case)
    if spec.exact is None:
        raise ConfigurationError(f"case {case!r} has no exact solution for a convergence study")
    if levels < 1:
        raise ConfigurationError("need at least one level")
    base = base or CONVERGENCE_BASE.get(case, 20)
    comps = CONVERGENCE_COMPONENTS.get(case, ("rho",))
    rows = []
    for lev in range(levels):
        n = base * 2**lev
        res = run(RunConfig(case, nx=n, ny=n if spec.ndim == 2 else None, order=order, cfl=cfl,
                            entropy_log=False, backend=backend))
        X, Y = res.field.grid.centers()
        ex = exact_solution(spec, X, Y, res.t)
        W = res.primitive()
        errs = {c: l1_error(W, ex, res.field.grid, c, normalize=normalize) for c in comps}
        orders = {}
        if rows:
            orders = {c: float(convergence_order([rows[-1].errors[c], errs[c]])[0]) for c in comps}
        rows.append(ConvergenceRow(n, errs, orders))
    return rows


def format_convergence(rows: list[ConvergenceRow], ndim: int = 1) -> str:
    comps = list(rows[0].errors)
    head = ["cells"] + [f"{c}_L1 {c}_order" for c in comps]
    out = ["  ".join(head)]
    for r in rows:
        cells = f"{r.cells}x{r.cells}" if ndim == 2 else str(r.cells)
        parts = [cells]
        for c in comps:
            o = r.orders.get(c)
            parts.append(f"{r.errors[c]:.2E} {'--' if o is None else f'{o:.4f}'}")
        out.append("  ".join(parts))
    return "\n".join(out)
