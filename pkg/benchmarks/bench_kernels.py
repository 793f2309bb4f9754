"""Time the line-sweep kernel and a short run on both backends.

    python benchmarks/bench_kernels.py [--cells 2000] [--repeat 5]
"""

import argparse
import time

import numpy as np

from oftt import kernels
from oftt.cases import get_case, init_case, make_grid
from oftt.driver import integrate


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cells", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--steps", type=int, default=20)
    a = ap.parse_args()

    spec = get_case("sod")
    grid = make_grid(spec, a.cells)
    f, _ = init_case(spec, grid)
    lines = np.ascontiguousarray(f.U.transpose(1, 0, 2))
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}; sod, {a.cells} cells")
    print(f"{'kernel':24s}" + "".join(f"{b:>12s}" for b in backends) + "   speedup")
    for k in (2, 3, 4):
        t = [best_of(lambda: kernels.sweep(lines, spec.gas, k, grid.dx, grid.gx, backend=b), a.repeat)
             for b in backends]
        sp = f"{t[-1] / t[0]:9.1f}x" if len(t) == 2 else ""
        print(f"{'sweep k=' + str(k):24s}" + "".join(f"{x * 1e3:10.2f}ms" for x in t) + sp)
    for k in (2, 4):
        t = []
        for b in backends:
            t.append(best_of(lambda: integrate(f, spec.gas, k, 10.0, spec.cfl, backend=b, max_steps=a.steps), 1))
        sp = f"{t[-1] / t[0]:9.1f}x" if len(t) == 2 else ""
        print(f"{f'{a.steps} steps k={k}':24s}" + "".join(f"{x:11.2f}s" for x in t) + sp)


if __name__ == "__main__":
    main()
