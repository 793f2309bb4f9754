"""Catalog of test problems: initial data, boundaries, final times, exact solutions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from oftt.eos import GasParams, prim_to_cons
from oftt.errors import UnsupportedCaseError
from oftt.scheme import Field, Grid, new_field
from oftt.timeint import CFL_1D, CFL_2D

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class CaseSpec:
    name: str
    ndim: int
    xlim: tuple[float, float]
    ylim: tuple[float, float]
    init: Callable  # (x, y) -> primitive array (..., 5)
    gas: GasParams
    bc: dict
    t_final: float
    cfl: float
    default_n: tuple[int, int]
    exact: Callable | None = field(default=None)  # (x, y, t) -> primitive
    description: str = ""


def _states(shape, values):
    out = np.empty(shape + (5,))
    out[...] = values
    return out


def _riemann_1d(left, right, x0=0.0):
    left = np.asarray(left, dtype=float)
    right = np.asarray(right, dtype=float)

    def init(x, y):
        return np.where((x <= x0)[..., None], left, right)

    return init


def _acc1d_I(x, y, t=0.0):
    W = _states(np.shape(x), (1.0, 1.0, 0.0, 2.0, 2.0))
    W[..., 0] = 1.0 + 0.2 * np.sin(x - t)
    return W


def _acc1d_II(x, y, t=0.0):
    s = np.sin(np.pi * (x - t))
    W = _states(np.shape(x), (1.0, 1.0, 0.0, 0.6, 0.4))
    W[..., 0] = 1.0 + 0.1 * s
    W[..., 3] = 0.6 + 0.1 * s
    W[..., 4] = 0.4 - 0.1 * s
    return W


def _acc2d(x, y, t=0.0):
    W = _states(np.shape(x), (1.0, 0.5, 0.5, 2.0, 2.0))
    W[..., 0] = 1.0 + 0.2 * np.sin(x + y - t)
    return W


def _riemann2d(x, y):
    W = np.empty(np.shape(x) + (5,))
    east = x > 0.8
    north = y > 0.8
    W[east & north] = (1.5, 0.0, 0.0, 0.75, 0.75)
    W[~east & north] = (0.5323, 1.206, 0.0, 0.15, 0.15)
    W[~east & ~north] = (0.138, 1.206, 1.206, 0.0145, 0.0145)
    W[east & ~north] = (0.5323, 0.0, 1.206, 0.15, 0.15)
    return W


def _shock_bubble(x, y):
    W = np.where(
        (x < 4.5)[..., None],
        np.array([1.0, 0.0, 0.0, 0.3571425, 0.3571425]),
        np.array([1.3764, -0.3336, 0.0, 0.560643, 0.560643]),
    )
    inside = (x - 3.5) ** 2 + y**2 < 0.5**2
    W[inside] = (0.1819, 0.0, 0.0, 0.220458, 0.220458)
    return W


RM_R0, RM_A0, RM_OMEGA, RM_RS = 7.162, 0.24, 12.0, 7.5


def _richtmyer_meshkov(x, y):
    theta = np.arctan2(y, x)
    r2 = x**2 + y**2
    rc = RM_R0 + RM_A0 * np.cos(RM_OMEGA * theta)
    W = np.empty(np.shape(x) + (5,))
    W[..., 0] = 1.479
    W[..., 1] = -0.518 * np.cos(theta)
    W[..., 2] = -0.518 * np.sin(theta)
    W[..., 3] = 1.041
    W[..., 4] = 0.788
    W[r2 < RM_RS**2] = (1.0, 0.0, 0.0, 0.6, 0.4)
    W[r2 < rc**2] = (5.04, 0.0, 0.0, 0.6, 0.4)
    return W


_PERIODIC = dict.fromkeys(("left", "right", "bottom", "top"), "periodic")
_NEUMANN = dict.fromkeys(("left", "right", "bottom", "top"), "neumann")

CATALOG: dict[str, CaseSpec] = {}


def _register(spec: CaseSpec):
    CATALOG[spec.name] = spec


_register(CaseSpec(
    "accuracy1d_I", 1, (0.0, TWO_PI), (0.0, 1.0),
    lambda x, y: _acc1d_I(x, y), GasParams(1.4, 1.4), _PERIODIC, 1.3, CFL_1D, (40, 1),
    exact=_acc1d_I, description="advected density sine wave, v=1, pe=pi=2",
))
_register(CaseSpec(
    "accuracy1d_II", 1, (0.0, 2.0), (0.0, 1.0),
    lambda x, y: _acc1d_II(x, y), GasParams(5.0 / 3.0, 5.0 / 3.0), _PERIODIC, 1.0, CFL_1D, (40, 1),
    exact=_acc1d_II, description="advected density and pressure sine waves, pe+pi=1",
))
_register(CaseSpec(
    "double_rarefaction", 1, (-5.0, 5.0), (0.0, 1.0),
    _riemann_1d((2.0, -1.0, 0.0, 0.6, 0.4), (2.0, 1.0, 0.0, 0.4, 0.6)),
    GasParams(1.4, 1.67), _NEUMANN, 2.0, CFL_1D, (2000, 1),
    description="two receding rarefactions",
))
_register(CaseSpec(
    "sod", 1, (-5.0, 5.0), (0.0, 1.0),
    _riemann_1d((1.0, 0.0, 0.0, 0.4, 0.6), (0.125, 0.0, 0.0, 0.06, 0.04)),
    GasParams(1.4, 1.4), _NEUMANN, 2.0, CFL_1D, (2000, 1),
    description="Sod shock tube with unequal species pressures",
))
_register(CaseSpec(
    "lax", 1, (-5.0, 5.0), (0.0, 1.0),
    _riemann_1d((0.445, 0.689, 0.0, 1.764, 1.764), (0.5, 0.0, 0.0, 0.2855, 0.2855)),
    GasParams(1.4, 1.67), _NEUMANN, 1.4, CFL_1D, (2000, 1),
    description="Lax shock tube",
))
_register(CaseSpec(
    "accuracy2d", 2, (0.0, TWO_PI), (0.0, TWO_PI),
    lambda x, y: _acc2d(x, y), GasParams(1.4, 1.4), _PERIODIC, 1.3, CFL_2D, (48, 48),
    exact=_acc2d, description="diagonally advected density sine wave",
))
_register(CaseSpec(
    "riemann2d", 2, (0.0, 1.0), (0.0, 1.0), _riemann2d,
    GasParams(1.4, 1.4), _NEUMANN, 0.75, CFL_2D, (400, 400),
    description="four-quadrant Riemann problem (variant 2: gamma_i=1.67, t=0.59)",
))
_register(CaseSpec(
    "shock_bubble", 2, (0.0, 6.5), (0.0, 0.89), _shock_bubble,
    GasParams(1.4, 1.4),
    {"left": "dirichlet", "right": "dirichlet", "bottom": "reflective", "top": "reflective"},
    7.1571, CFL_2D, (400, 144),
    description="shock hitting a light bubble",
))
_register(CaseSpec(
    "richtmyer_meshkov", 2, (-12.0, 12.0), (-12.0, 12.0), _richtmyer_meshkov,
    GasParams(1.4, 1.67), _NEUMANN, 17.46, CFL_2D, (800, 800),
    description="converging shock on a perturbed circular interface",
))

#: alternative gas constants and final time for the 2D Riemann problem
RIEMANN2D_VARIANTS = {1: (GasParams(1.4, 1.4), 0.75), 2: (GasParams(1.4, 1.67), 0.59)}


def case_names() -> list[str]:
    return list(CATALOG)


def get_case(name: str, variant: int | None = None) -> CaseSpec:
    try:
        spec = CATALOG[name]
    except KeyError:
        raise UnsupportedCaseError(f"unknown case {name!r}; known: {', '.join(CATALOG)}") from None
    if variant is not None:
        if name != "riemann2d" or variant not in RIEMANN2D_VARIANTS:
            raise UnsupportedCaseError(f"case {name!r} has no variant {variant}")
        gas, t_final = RIEMANN2D_VARIANTS[variant]
        spec = CaseSpec(**{**spec.__dict__, "gas": gas, "t_final": t_final})
    return spec


def make_grid(spec: CaseSpec, nx: int | None = None, ny: int | None = None) -> Grid:
    if nx is None:
        nx, ny = spec.default_n if ny is None else (spec.default_n[0], ny)
    elif ny is None:
        ny = nx if spec.default_n[0] == spec.default_n[1] else max(1, round(nx * spec.default_n[1] / spec.default_n[0]))
    if spec.ndim == 1:
        ny = 1
    return Grid(nx, ny, spec.xlim, spec.ylim)


def init_case(name, grid: Grid, variant: int | None = None) -> tuple[Field, CaseSpec]:
    """Field sampled at cell centres with boundaries applied, plus its spec."""
    spec = name if isinstance(name, CaseSpec) else get_case(name, variant)
    X, Y = grid.centers()
    W = spec.init(X, Y)
    U = prim_to_cons(W, spec.gas)
    f = new_field(grid, U, spec.bc)
    return f, spec


def exact_solution(name, x, y, t):
    spec = name if isinstance(name, CaseSpec) else get_case(name)
    if spec.exact is None:
        raise UnsupportedCaseError(f"case {spec.name!r} has no exact solution")
    x = np.asarray(x, dtype=float)
    y = np.zeros_like(x) if y is None else np.asarray(y, dtype=float)
    return spec.exact(x, y, t)
