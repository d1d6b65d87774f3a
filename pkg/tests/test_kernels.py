import os
import pathlib
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dupcalc import _kernels
from dupcalc._kernels import _pykernels

from conftest import random_algebras

BACKENDS = [pytest.param(_pykernels, id="python")]
if _kernels.compiled is not None:
    BACKENDS.append(pytest.param(_kernels.compiled, id="cython"))


def _ops(A):
    return [(k, np.ascontiguousarray(A.tables[s], dtype=np.int64)) for s, k in A.sig]


def brute_cg(A, a, b):
    """Least compatible partition joining a and b, by naive fixpoint."""
    n = A.size
    rel = np.eye(n, dtype=bool)
    rel[a, b] = rel[b, a] = True
    while True:
        old = rel.copy()
        rel = rel | (rel.astype(int) @ rel.astype(int) > 0)
        for s, k in A.sig:
            for args in np.ndindex(*(n,) * k):
                for p in range(k):
                    for y in range(n):
                        if rel[args[p], y]:
                            other = list(args)
                            other[p] = y
                            u, v = A.apply(s, list(args)), A.apply(s, other)
                            rel[u, v] = rel[v, u] = True
        if (rel == old).all():
            return [int(np.flatnonzero(rel[x])[0]) for x in range(n)]


@pytest.mark.parametrize("backend", BACKENDS)
@given(A=random_algebras(max_size=5), data=st.data())
def test_cg_closure_matches_brute_force(backend, A, data):
    a = data.draw(st.integers(0, A.size - 1))
    b = data.draw(st.integers(0, A.size - 1))
    got = backend.cg_closure(A.size, _ops(A), [(a, b)])
    assert list(map(int, got)) == brute_cg(A, a, b)


@pytest.mark.parametrize("backend", BACKENDS)
@given(A=random_algebras(max_size=4), B=random_algebras(max_size=4), data=st.data())
def test_propagate_agrees_with_pure(backend, A, B, data):
    hmap = np.full(A.size, -1, dtype=np.int64)
    hmap[data.draw(st.integers(0, A.size - 1))] = data.draw(st.integers(0, B.size - 1))
    h1, h2 = hmap.copy(), hmap.copy()
    r1 = _pykernels.propagate(A.size, B.size, _ops(A), _ops(B), h1)
    r2 = backend.propagate(A.size, B.size, _ops(A), _ops(B), h2)
    assert bool(r1) == bool(r2)
    if r1:
        assert (h1 == h2).all()


def test_pure_backend_selected_by_environment():
    env = dict(os.environ, DUPCALC_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from dupcalc import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_pure_backend_gives_same_congruences():
    code = ("from dupcalc.catalog import catalog_algebra; from dupcalc.congruence import "
            "congruence_lattice; print([len(congruence_lattice(catalog_algebra(k))) "
            "for k in ('3Du','M3','N5','4_DBu')])")
    runs = [subprocess.run([sys.executable, "-c", code], env=dict(os.environ, DUPCALC_PURE=v),
                           capture_output=True, text=True, check=True).stdout for v in ("1", "0")]
    assert runs[0] == runs[1] == "[4, 2, 5, 2]\n"


@pytest.mark.skipif(_kernels.compiled is None, reason="compiled kernels not built")
def test_benchmark_script_agrees(capsys):
    import runpy
    path = pathlib.Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    main = runpy.run_path(str(path))["main"]
    assert main(["--repeat", "1", "--algebra", "4_DBu"]) == 0
    assert "cg_closure" in capsys.readouterr().out
