"""Compare the compiled and pure-Python elimination kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json-out bench.json]

Each workload is the largest boundary matrix of an order complex; both
backends must return identical results, which the script checks.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from contcomb import kernels
from contcomb.posets.poset import exp_poset, partition_lattice, order_complex
from contcomb.simplicial.chains import simplicial_chain_complex
from contcomb.simplicial.complex import barycentric_subdivision, torus_seven_vertex


def _workloads():
    yield "partition-lattice-7", order_complex(partition_lattice(7, truncated=True))
    yield "exp-4-of-8", order_complex(exp_poset(8, 4))
    yield "sd3-torus", barycentric_subdivision(barycentric_subdivision(barycentric_subdivision(torus_seven_vertex())))


def _largest_boundary(K):
    C = simplicial_chain_complex(K)
    k = max(C.boundaries, key=lambda j: len(C.boundaries[j]) * C.sizes[j - 1])
    return k, C.boundaries[k], C.sizes[k - 1]


def _time(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return statistics.median(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json-out")
    args = ap.parse_args(argv)

    if kernels.compiled_backend is None:
        print("compiled kernels unavailable; only the Python backend will be timed", file=sys.stderr)
    rows = []
    for name, K in _workloads():
        k, cols, nrows = _largest_boundary(K)
        for modulus in (0, 2, 3):
            row = {"workload": name, "degree": k, "shape": [nrows, len(cols)], "modulus": modulus}
            results = {}
            for backend in ("python", "compiled"):
                if backend == "compiled" and kernels.compiled_backend is None:
                    continue
                if modulus == 0:
                    fn = lambda b=backend: sorted(kernels.diagonal_form(cols, nrows, b))
                else:
                    fn = lambda b=backend: kernels.rank_mod(cols, nrows, modulus, b)
                row[f"{backend}_s"], results[backend] = _time(fn, args.repeat)
            if len(results) == 2:
                row["agree"] = results["python"] == results["compiled"]
                row["speedup"] = round(row["python_s"] / row["compiled_s"], 2) if row["compiled_s"] else None
            rows.append(row)
            print(
                f"{name:22s} d{k} {nrows:>6}x{len(cols):<6} mod {modulus}: "
                f"python {row['python_s']:.3f}s"
                + (f"  compiled {row['compiled_s']:.3f}s  x{row['speedup']}  agree={row['agree']}" if "compiled_s" in row else "")
            )
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r.get("agree", True) for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
