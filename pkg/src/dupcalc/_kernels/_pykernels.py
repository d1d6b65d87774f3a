"""Pure numpy implementations of the hot loops (fallback for the Cython core)."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

INDEX = np.int64


@lru_cache(maxsize=64)
def _tuples(n: int, k: int) -> np.ndarray:
    if k == 0:
        return np.zeros((1, 0), dtype=INDEX)
    out = np.indices((n,) * k, dtype=INDEX).reshape(k, -1).T.copy()
    out.setflags(write=False)
    return out


def cg_closure(n, ops, pairs, rep=None):
    """Least congruence containing ``rep`` (a partition) and ``pairs``.

    ``ops`` is a sequence of ``(arity, flat_table)``. Returns the
    least-representative array of the resulting partition.
    """
    rep = np.arange(n, dtype=INDEX) if rep is None else np.array(rep, dtype=INDEX)
    work = []

    def merge(x, y):
        rx, ry = rep[x], rep[y]
        if rx == ry:
            return
        lo, hi = (rx, ry) if rx < ry else (ry, rx)
        rep[rep == hi] = lo
        work.append((x, y))

    for a, b in pairs:
        merge(int(a), int(b))
    powers = {}
    while work:
        a, b = work.pop()
        for k, tab in ops:
            if k == 0:
                continue
            if k not in powers:
                powers[k] = _tuples(n, k - 1)
            others = powers[k]
            for p in range(k):
                ia = np.zeros(others.shape[0], dtype=INDEX)
                ib = np.zeros(others.shape[0], dtype=INDEX)
                col = 0
                for j in range(k):
                    if j == p:
                        ia = ia * n + a
                        ib = ib * n + b
                    else:
                        ia = ia * n + others[:, col]
                        ib = ib * n + others[:, col]
                        col += 1
                xs, ys = tab[ia], tab[ib]
                diff = np.flatnonzero(rep[xs] != rep[ys])
                for i in diff:
                    merge(int(xs[i]), int(ys[i]))
    return rep


def propagate(n_src, n_dst, ops_src, ops_dst, hmap):
    """Extend a partial map (``-1`` = unset) by closure under the operations.

    Works in place on ``hmap``; returns False as soon as two tuples force
    different images on one element.
    """
    while True:
        changed = False
        for (k, tab_s), (_, tab_d) in zip(ops_src, ops_dst):
            args = _tuples(n_src, k)
            if k:
                imgs = hmap[args]
                ok = (imgs >= 0).all(axis=1)
                if not ok.any():
                    continue
                x = tab_s[np.flatnonzero(ok)]
                idx = np.zeros(x.shape[0], dtype=INDEX)
                for j in range(k):
                    idx = idx * n_dst + imgs[ok, j]
                y = tab_d[idx]
            else:
                x = tab_s[:1]
                y = tab_d[:1]
            cur = hmap[x]
            if np.any((cur >= 0) & (cur != y)):
                return False
            new = cur < 0
            if new.any():
                hmap[x[new]] = y[new]
                if np.any(hmap[x] != y):
                    return False
                changed = True
        if not changed:
            return True
