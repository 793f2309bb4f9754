"""Command-line interface: ``run``, ``converge`` and ``list-cases``.

Exit status 0 on success, 2 for usage or configuration errors and 3 when
the solver hits an inadmissible state.
"""

from __future__ import annotations

import argparse
import sys

from oftt.errors import AdmissibilityError, ConfigurationError, UnsupportedCaseError

EXIT_OK, EXIT_USAGE, EXIT_SOLVER = 0, 2, 3

#: keys accepted in a ``--config`` file and their argument types
CONFIG_KEYS = {
    "case": str, "nx": int, "ny": int, "order": int, "cfl": float, "tfinal": float,
    "ec_only": lambda v: v.strip().lower() in ("1", "true", "yes", "on"),
    "entropy_log": str, "out": str, "variant": int, "format": str, "backend": str,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def read_config(path) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as err:
        raise ConfigurationError(f"cannot read config {path}: {err}") from err
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}:{lineno}: expected key=value")
        key, value = (t.strip() for t in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise ConfigurationError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError as err:
            raise ConfigurationError(f"{path}:{lineno}: bad value for {key}: {value!r}") from err
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="oftt", description="Entropy-stable solver for the two-temperature Euler equations")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    r = sub.add_parser("run", help="run a catalog case and write the final field")
    r.add_argument("--config", help="key=value file; command-line flags take precedence")
    r.add_argument("--case")
    r.add_argument("--nx", type=int)
    r.add_argument("--ny", type=int)
    r.add_argument("--order", type=int, choices=(2, 3, 4))
    r.add_argument("--cfl", type=float)
    r.add_argument("--tfinal", type=float)
    r.add_argument("--ec-only", action="store_true", default=None, help="disable dissipation")
    r.add_argument("--entropy-log", metavar="PATH")
    r.add_argument("--out", metavar="PATH")
    r.add_argument("--format", choices=("csv1d", "vtk2d"))
    r.add_argument("--variant", type=int, choices=(1, 2), help="riemann2d gas variant")
    r.add_argument("--backend", choices=("cython", "python"))

    c = sub.add_parser("converge", help="L1 errors and orders on refined grids")
    c.add_argument("--case", required=True)
    c.add_argument("--order", type=int, choices=(2, 3, 4), required=True)
    c.add_argument("--levels", type=int, required=True)
    c.add_argument("--base", type=int, help="coarsest cell count")
    c.add_argument("--norm", choices=("mean", "sum"), default="mean",
                   help="mean: divide the L1 sum by the domain measure")
    c.add_argument("--backend", choices=("cython", "python"))

    sub.add_parser("list-cases", help="print the case catalog")
    return p


def _cmd_run(a) -> int:
    from oftt.driver import RunConfig, run
    from oftt.io import write_output

    opts = read_config(a.config) if a.config else {}
    for key in CONFIG_KEYS:
        val = getattr(a, key, None)
        if val is not None:
            opts[key] = val
    for key in ("case", "order", "out"):
        if key not in opts:
            raise UsageError(f"oftt run: error: --{key} is required")
    cfg = RunConfig(
        opts["case"], nx=opts.get("nx"), ny=opts.get("ny"), order=opts["order"], cfl=opts.get("cfl"),
        t_final=opts.get("tfinal"), ec_only=bool(opts.get("ec_only", False)),
        entropy_log=True, out=opts["out"], entropy_log_path=opts.get("entropy_log"),
        variant=opts.get("variant"), backend=opts.get("backend"),
    )
    res = run(cfg)
    write_output(res.field, res.spec.gas, cfg.out, opts.get("format"))
    if cfg.entropy_log_path:
        res.ledger.write(cfg.entropy_log_path)
    print(f"{res.spec.name}: t={res.t:.6g} steps={res.steps} max entropy change={res.ledger.max_change():.3e}")
    return EXIT_OK


def _cmd_converge(a) -> int:
    from oftt.cases import get_case
    from oftt.driver import convergence_study, format_convergence

    spec = get_case(a.case)
    rows = convergence_study(a.case, a.order, a.levels, a.base, a.norm == "mean", a.backend)
    print(f"{a.case} order {a.order}, t={spec.t_final}, L1 norm={a.norm}")
    print(format_convergence(rows, spec.ndim))
    return EXIT_OK


def _cmd_list(a) -> int:
    from oftt.cases import CATALOG

    for name, spec in CATALOG.items():
        print(f"{name:20s} {spec.ndim}D t={spec.t_final:<8g} {spec.description}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
        if a.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        handler = {"run": _cmd_run, "converge": _cmd_converge, "list-cases": _cmd_list}[a.command]
        return handler(a)
    except UsageError as err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    except (ConfigurationError, UnsupportedCaseError, ValueError) as err:
        if isinstance(err, AdmissibilityError):
            print(f"solver failure: {err}", file=sys.stderr)
            return EXIT_SOLVER
        print(f"oftt: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except FloatingPointError as err:
        print(f"solver failure: {err}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as err:
        print(f"oftt: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
