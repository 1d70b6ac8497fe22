"""Compare the compiled and pure-Python eigensolver kernels.

    python benchmarks/bench_kernels.py --sizes 64 128 256 512 --repeat 3

Inputs are oscillator Hamiltonians (d = 1, m = omega = 1) of dimension 8N
plus random Hermitian matrices; both backends must agree on the eigenvalues.
"""

import argparse
import time

import numpy as np

from nadosc import kernels
from nadosc.hamiltonian import OscParams, assemble


def random_hermitian(n, seed=0):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return g + g.conj().T


def oscillator(n):
    return np.array(assemble(OscParams(1, 1.0, 1.0, max(1, n // 8)))[0].matrix)


def best_time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def solve_ql(impl, h):
    d, e, q = impl.tridiagonalize(h)
    w, z = impl.tridiag_eigen(d, e)
    return np.sort(w)


def solve_jacobi(impl, h):
    return np.sort(impl.jacobi_eigen(h, 1e-12, 100)[0])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512])
    parser.add_argument("--jacobi-max", type=int, default=128, help="largest size for the Jacobi comparison")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"python": kernels.backend_module("python")}
    try:
        backends["compiled"] = kernels.backend_module("compiled")
    except ImportError:
        print("compiled extension not built; timing the Python kernels only")

    header = f"{'method':<8} {'matrix':<10} {'n':>5} " + " ".join(f"{b + ' [s]':>14}" for b in backends) + f" {'speedup':>8} {'max |dw|':>10}"
    print(header)
    print("-" * len(header))
    for method, solve in (("ql", solve_ql), ("jacobi", solve_jacobi)):
        for n in args.sizes:
            if method == "jacobi" and n > args.jacobi_max:
                continue
            for label, h in (("random", random_hermitian(n)), ("oscillator", oscillator(n))):
                times, vals = {}, {}
                for name, impl in backends.items():
                    times[name], vals[name] = best_time(lambda: solve(impl, h), args.repeat)
                ref = np.linalg.eigvalsh(h)
                err = max(float(np.max(np.abs(v - ref))) for v in vals.values())
                speed = times["python"] / times["compiled"] if "compiled" in times else float("nan")
                cols = " ".join(f"{times[b]:>14.4f}" for b in backends)
                print(f"{method:<8} {label:<10} {h.shape[0]:>5} {cols} {speed:>8.1f} {err:>10.1e}")


if __name__ == "__main__":
    main()
