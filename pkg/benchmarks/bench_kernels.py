"""Compare the Cython kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload runs through both backends, the outputs are compared, and
the best-of-N wall time is reported.
"""

import argparse
import time

import numpy as np

from dupcalc import _kernels
from dupcalc.congruence import _ops
from dupcalc.refs import resolve_algebra

WORKLOADS = ["4_DBu", "P(Gamma_BLu;N5)", "P(Gamma_TLtf;4_DBu)", "P(Gamma_BLu;F(2Du;2))"]


def principal_all(mod, alg):
    """Every principal congruence Cg(0, b)."""
    ops = _ops(alg)
    return [mod.cg_closure(alg.size, ops, [(0, b)]) for b in range(1, alg.size)]


def identity_by_propagation(mod, alg):
    """Rebuild the identity endomorphism from the whole universe seeded at each element."""
    ops = _ops(alg)
    out = []
    for a in range(alg.size):
        hmap = np.full(alg.size, -1, dtype=np.int64)
        hmap[a] = a
        mod.propagate(alg.size, alg.size, ops, ops, hmap)
        out.append(hmap)
    return out


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn()
        times.append(time.perf_counter() - t0)
    return min(times), res


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--algebra", action="append", help="reference to benchmark (repeatable)")
    args = ap.parse_args(argv)
    if _kernels.compiled is None:
        print("compiled kernels unavailable (DUPCALC_PURE set or extension not built)")
        return 1
    print(f"{'algebra':28s} {'kernel':11s} {'cython':>10s} {'python':>10s} {'speedup':>8s}")
    for ref in args.algebra or WORKLOADS:
        alg = resolve_algebra(ref)
        for name, job in (("cg_closure", principal_all), ("propagate", identity_by_propagation)):
            tc, rc = best(lambda: job(_kernels.compiled, alg), args.repeat)
            tp, rp = best(lambda: job(_kernels.pure, alg), args.repeat)
            assert all(np.array_equal(x, y) for x, y in zip(rc, rp)), (ref, name)
            print(f"{ref + f' (n={alg.size})':28s} {name:11s} {tc * 1e3:8.2f}ms {tp * 1e3:8.2f}ms "
                  f"{tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
