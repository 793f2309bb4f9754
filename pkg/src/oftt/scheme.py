"""Structured grid, ghost-cell boundaries and the semi-discrete right-hand side.

The same 2D code path handles 1D problems: with ``ny == 1`` the y ghost
layers, y fluxes and y derivatives are all skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from oftt import kernels
from oftt.eigen import interface_eigs
from oftt.eos import SWAP_XY, GasParams, check_admissible, cons_to_prim, entropy_potential, entropy_vars
from oftt.errors import ConfigurationError
from oftt.fluxes import ec_flux
from oftt.reconstruction import reconstruct_scaled_jump, stencil_width

BC_KINDS = ("periodic", "neumann", "dirichlet", "reflective")
SIDES = ("left", "right", "bottom", "top")

#: ghost layers: ENO degree 3 reaches 3 cells beyond the cell next to the boundary interface
DEFAULT_GHOST = 4


@dataclass(frozen=True)
class Grid:
    nx: int
    ny: int = 1
    xlim: tuple[float, float] = (0.0, 1.0)
    ylim: tuple[float, float] = (0.0, 1.0)
    ghost: int = DEFAULT_GHOST

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ConfigurationError("cell counts must be positive")
        if not (self.xlim[1] > self.xlim[0] and self.ylim[1] > self.ylim[0]):
            raise ConfigurationError("domain bounds must be increasing")
        if self.ghost < 3:
            raise ConfigurationError("at least 3 ghost layers are required")

    @property
    def ndim(self) -> int:
        return 1 if self.ny == 1 else 2

    @property
    def dx(self) -> float:
        return (self.xlim[1] - self.xlim[0]) / self.nx

    @property
    def dy(self) -> float:
        return (self.ylim[1] - self.ylim[0]) / self.ny

    @property
    def gx(self) -> int:
        return self.ghost

    @property
    def gy(self) -> int:
        return self.ghost if self.ndim == 2 else 0

    @property
    def shape(self) -> tuple[int, int, int]:
        """Array shape including ghost layers."""
        return (self.nx + 2 * self.gx, self.ny + 2 * self.gy, 5)

    @property
    def interior(self) -> tuple[slice, slice]:
        return (slice(self.gx, self.gx + self.nx), slice(self.gy, self.gy + self.ny))

    @property
    def x(self) -> np.ndarray:
        """Cell centres including ghosts."""
        i = np.arange(-self.gx, self.nx + self.gx)
        return self.xlim[0] + (i + 0.5) * self.dx

    @property
    def y(self) -> np.ndarray:
        j = np.arange(-self.gy, self.ny + self.gy)
        return self.ylim[0] + (j + 0.5) * self.dy

    @property
    def cell_volume(self) -> float:
        return self.dx * (self.dy if self.ndim == 2 else 1.0)

    def centers(self, ghosts: bool = False):
        x, y = self.x, self.y
        if not ghosts:
            x = x[self.gx : self.gx + self.nx]
            y = y[self.gy : self.gy + self.ny]
        if self.ndim == 1:
            y = np.zeros_like(y)
        return np.meshgrid(x, y, indexing="ij")


@dataclass
class Field:
    """Conserved states on the padded grid plus per-side boundary kinds."""

    grid: Grid
    U: np.ndarray
    bc: dict = field(default_factory=lambda: dict.fromkeys(SIDES, "neumann"))
    frozen: np.ndarray | None = None

    def __post_init__(self):
        if self.U.shape != self.grid.shape:
            raise ConfigurationError(f"field shape {self.U.shape} does not match grid {self.grid.shape}")
        for side in SIDES:
            kind = self.bc.setdefault(side, "neumann")
            if kind not in BC_KINDS:
                raise ConfigurationError(f"unknown boundary kind {kind!r} on {side}")
        for a, b in (("left", "right"), ("bottom", "top")):
            if (self.bc[a] == "periodic") != (self.bc[b] == "periodic"):
                raise ConfigurationError(f"periodic boundary on {a} requires periodic on {b}")

    @property
    def interior(self) -> np.ndarray:
        return self.U[self.grid.interior]

    @interior.setter
    def interior(self, value):
        self.U[self.grid.interior] = value

    def copy(self) -> "Field":
        return Field(self.grid, self.U.copy(), dict(self.bc), self.frozen)

    def with_interior(self, Ui) -> "Field":
        out = Field(self.grid, np.empty_like(self.U), dict(self.bc), self.frozen)
        out.interior = Ui
        return out

    def primitive(self, g: GasParams, check: bool = True):
        return cons_to_prim(self.interior, g, check=check)

    def check_admissible(self, g: GasParams, where: str = "cell"):
        check_admissible(cons_to_prim(self.interior, g, check=False), where)

    def freeze_boundary(self):
        """Remember the current ghost values as Dirichlet data."""
        self.frozen = self.U.copy()


def _fill_axis(U, frozen, lo_kind, hi_kind, g, n, normal):
    """Fill ghosts along axis 0 of ``U`` (interior ``g .. g+n``)."""
    if g == 0:
        return
    lo = U[:g]
    hi = U[g + n :]
    if lo_kind == "periodic":
        lo[...] = U[n : n + g]
        hi[...] = U[g : 2 * g]
        return
    for kind, ghost, side in ((lo_kind, lo, 0), (hi_kind, hi, 1)):
        if kind == "neumann":
            edge = U[g] if side == 0 else U[g + n - 1]
            ghost[...] = edge[None]
        elif kind == "dirichlet":
            if frozen is None:
                raise ConfigurationError("dirichlet boundary needs frozen boundary data")
            ghost[...] = frozen[:g] if side == 0 else frozen[g + n :]
        elif kind == "reflective":
            src = U[g : 2 * g][::-1] if side == 0 else U[n : g + n][::-1]
            ghost[...] = src
            ghost[..., normal] *= -1.0


def apply_boundary(f: Field) -> Field:
    """Fill ghost layers in place according to ``f.bc`` and return ``f``.

    x ghosts are filled for interior rows and y ghosts for interior columns;
    corner ghosts are never read by the sweeps.
    """
    G = f.grid
    gy, ny, gx, nx = G.gy, G.ny, G.gx, G.nx
    rows = slice(gy, gy + ny)
    cols = slice(gx, gx + nx)
    fr = f.frozen
    _fill_axis(f.U[:, rows], None if fr is None else fr[:, rows], f.bc["left"], f.bc["right"], gx, nx, 1)
    if G.ndim == 2:
        Uy = f.U[cols].swapaxes(0, 1)
        fry = None if fr is None else fr[cols].swapaxes(0, 1)
        _fill_axis(Uy, fry, f.bc["bottom"], f.bc["top"], gy, ny, 2)
    return f


class RHS(NamedTuple):
    L: np.ndarray
    qx: np.ndarray
    qy: np.ndarray | None


def rhs_full(f: Field, g: GasParams, k: int, dissipation: float = 1.0, recon: int | None = None, backend=None) -> RHS:
    """Semi-discrete operator plus the interface entropy fluxes of both sweeps.

    ``L`` has the interior shape ``(nx, ny, 5)``; ``qx`` is ``(ny, nx+1)`` and
    ``qy`` is ``(nx, ny+1)`` (``None`` in 1D). Ghost layers must be filled.
    """
    if k not in (2, 3, 4):
        raise ValueError(f"scheme order must be 2, 3 or 4, got {k}")
    G = f.grid
    gx, gy, nx, ny = G.gx, G.gy, G.nx, G.ny
    lines = f.U[:, gy : gy + ny].transpose(1, 0, 2)
    fx, qx, ncx = kernels.sweep(lines, g, k, G.dx, gx, dissipation, recon, backend)
    L = -(fx[:, 1:] - fx[:, :-1]) / G.dx - ncx
    L = L.transpose(1, 0, 2)
    qy = None
    if G.ndim == 2:
        lines = f.U[gx : gx + nx][..., SWAP_XY]
        fy, qy, ncy = kernels.sweep(lines, g, k, G.dy, gy, dissipation, recon, backend)
        Ly = -(fy[:, 1:] - fy[:, :-1]) / G.dy - ncy
        L = L + Ly[..., SWAP_XY]
    return RHS(np.ascontiguousarray(L), qx, qy)


def rhs(f: Field, g: GasParams, k: int, dissipation: float = 1.0, backend=None) -> np.ndarray:
    return rhs_full(f, g, k, dissipation, backend=backend).L


def entropy_flux_divergence(res: RHS, grid: Grid) -> np.ndarray:
    """Per-cell ``(q_{i+1/2} - q_{i-1/2})/dx + (q_{j+1/2} - q_{j-1/2})/dy``."""
    div = ((res.qx[:, 1:] - res.qx[:, :-1]) / grid.dx).T
    if res.qy is not None:
        div = div + (res.qy[:, 1:] - res.qy[:, :-1]) / grid.dy
    return div


def entropy_residual(f: Field, g: GasParams, res: RHS) -> np.ndarray:
    """Per-cell ``dEnt/dt + div q`` with ``dEnt/dt = V . L``; nonpositive for an ES scheme."""
    V = entropy_vars(f.primitive(g, check=False), g)
    return np.einsum("...i,...i->...", V, res.L) + entropy_flux_divergence(res, f.grid)


def interface_flux(stencil, g: GasParams, k: int, d="x", dissipation: float = 1.0, with_entropy: bool = False):
    """Entropy-stable flux at the centre interface of a stencil of primitive states.

    The stencil holds ``stencil_width(k)`` states along direction ``d``
    (8 for ``k = 4``, 6 for ``k = 3``, 4 for ``k = 2``).
    """
    W = np.asarray(stencil, dtype=float)
    S = stencil_width(k)
    if W.shape[-2] != S:
        raise ValueError(f"order-{k} interface flux needs {S} states, got {W.shape[-2]}")
    c = S // 2 - 1  # left cell of the interface
    V = entropy_vars(W, g)
    F = entropy_potential(W, d)

    def pair(a, b):
        fp = ec_flux(W[..., a, :], W[..., b, :], g, d)
        qp = 0.5 * np.dot(V[..., a, :] + V[..., b, :], fp) - 0.5 * (F[..., a] + F[..., b])
        return fp, qp

    fl, ql = pair(c, c + 1)
    if k >= 3:
        f_a, q_a = pair(c - 1, c + 1)
        f_b, q_b = pair(c, c + 2)
        fl = (4.0 / 3.0) * fl - (1.0 / 6.0) * (f_a + f_b)
        ql = (4.0 / 3.0) * ql - (1.0 / 6.0) * (q_a + q_b)
    R, lam = interface_eigs(W[..., c, :], W[..., c + 1, :], g, d)
    jump = reconstruct_scaled_jump(W, R, g, k)
    Rs = R @ jump
    fl = fl - 0.5 * dissipation * lam * Rs
    ql = ql - 0.5 * dissipation * lam * np.dot(0.5 * (V[..., c, :] + V[..., c + 1, :]), Rs)
    return (fl, ql) if with_entropy else fl


def new_field(grid: Grid, U_interior, bc: dict | None = None) -> Field:
    U = np.zeros(grid.shape)
    f = Field(grid, U, dict(bc) if bc else dict.fromkeys(SIDES, "neumann"))
    f.interior = U_interior
    if "dirichlet" in f.bc.values():
        kinds = dict(f.bc)
        f.bc = {s: ("neumann" if v == "dirichlet" else v) for s, v in kinds.items()}
        apply_boundary(f)
        f.freeze_boundary()
        f.bc = kinds
    apply_boundary(f)
    return f
