"""Plot-ready output: 17-digit CSV for 1D fields and legacy VTK for 2D fields."""

from __future__ import annotations

import numpy as np

from oftt.eos import GasParams, cons_to_prim

CSV_HEADER = ("x", "rho", "vx", "vy", "pe", "pi", "E")
FORMATS = ("csv1d", "vtk2d")


def _fmt(v) -> str:
    return format(float(v), ".17g")


def _columns(f, g: GasParams):
    W = cons_to_prim(f.interior, g, check=False)
    return W, f.interior[..., 3]


def write_csv1d(f, g: GasParams, path):
    grid = f.grid
    if grid.ndim != 1:
        raise ValueError("csv1d output needs a 1D field; use vtk2d")
    W, E = _columns(f, g)
    x = grid.centers()[0][:, 0]
    lines = [",".join(CSV_HEADER)]
    for i in range(grid.nx):
        row = (x[i], *W[i, 0], E[i, 0])
        lines.append(",".join(_fmt(v) for v in row))
    _write(path, "\n".join(lines) + "\n")


def read_csv1d(path) -> dict[str, np.ndarray]:
    try:
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    except OSError as err:
        raise OSError(f"cannot read {path}: {err}") from err
    return {name: data[:, j] for j, name in enumerate(CSV_HEADER)}


def write_vtk2d(f, g: GasParams, path, title: str = "oftt field"):
    """Legacy ASCII STRUCTURED_POINTS file with one scalar per state component."""
    grid = f.grid
    W, E = _columns(f, g)
    nx, ny = grid.nx, grid.ny
    out = [
        "# vtk DataFile Version 3.0",
        title.replace("\n", " ")[:255],
        "ASCII",
        "DATASET STRUCTURED_POINTS",
        f"DIMENSIONS {nx} {ny} 1",
        f"ORIGIN {_fmt(grid.xlim[0] + 0.5 * grid.dx)} {_fmt(grid.ylim[0] + 0.5 * grid.dy)} 0",
        f"SPACING {_fmt(grid.dx)} {_fmt(grid.dy)} 1",
        f"POINT_DATA {nx * ny}",
    ]
    fields = {"rho": W[..., 0], "vx": W[..., 1], "vy": W[..., 2], "pe": W[..., 3], "pi": W[..., 4], "E": E}
    for name, arr in fields.items():
        out.append(f"SCALARS {name} double 1")
        out.append("LOOKUP_TABLE default")
        # x varies fastest in VTK point order
        out.extend(_fmt(v) for v in arr.T.ravel())
    _write(path, "\n".join(out) + "\n")


def read_vtk2d(path) -> dict:
    """Parse a file written by :func:`write_vtk2d` back into arrays of shape (nx, ny)."""
    try:
        with open(path) as fh:
            lines = fh.read().split("\n")
    except OSError as err:
        raise OSError(f"cannot read {path}: {err}") from err
    nx = ny = None
    out = {}
    i = 0
    while i < len(lines):
        tok = lines[i].split()
        if tok and tok[0] == "DIMENSIONS":
            nx, ny = int(tok[1]), int(tok[2])
        elif tok and tok[0] in ("ORIGIN", "SPACING"):
            out[tok[0].lower()] = tuple(float(t) for t in tok[1:])
        elif tok and tok[0] == "SCALARS":
            vals = np.array([float(v) for v in lines[i + 2 : i + 2 + nx * ny]])
            out[tok[1]] = vals.reshape(ny, nx).T
            i += 1 + nx * ny
        i += 1
    out["dimensions"] = (nx, ny)
    return out


def write_output(f, g: GasParams, path, fmt: str | None = None):
    fmt = fmt or ("csv1d" if f.grid.ndim == 1 else "vtk2d")
    if fmt == "csv1d":
        write_csv1d(f, g, path)
    elif fmt == "vtk2d":
        write_vtk2d(f, g, path)
    else:
        raise ValueError(f"unknown output format {fmt!r}; choose from {FORMATS}")
    return path


def _write(path, text: str):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as err:
        raise OSError(f"cannot write {path}: {err}") from err
