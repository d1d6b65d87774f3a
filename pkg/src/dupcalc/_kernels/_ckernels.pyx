# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the congruence-closure and map-propagation loops."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

ctypedef cnp.int64_t idx_t


cdef inline idx_t _find(idx_t* parent, idx_t x) noexcept nogil:
    cdef idx_t r = x
    while parent[r] != r:
        r = parent[r]
    cdef idx_t nxt
    while parent[x] != r:
        nxt = parent[x]
        parent[x] = r
        x = nxt
    return r


def cg_closure(Py_ssize_t n, ops, pairs, rep=None):
    cdef cnp.ndarray[idx_t, ndim=1] par = (np.arange(n, dtype=np.int64) if rep is None
                                           else np.array(rep, dtype=np.int64))
    cdef idx_t* parent = <idx_t*> par.data
    cdef Py_ssize_t cap = 2 * n + 2 * len(pairs) + 16
    cdef idx_t* stack = <idx_t*> malloc(2 * cap * sizeof(idx_t))
    cdef Py_ssize_t top = 0
    cdef idx_t a, b, x, y, rx, ry, ia, ib, m, rem, digit
    cdef Py_ssize_t i, p, j, k, count, o
    cdef cnp.ndarray[idx_t, ndim=1] tab
    cdef idx_t* t
    arities = [int(kk) for kk, _ in ops]
    tabs = [np.ascontiguousarray(tt, dtype=np.int64) for _, tt in ops]
    try:
        for pa in pairs:
            x = pa[0]
            y = pa[1]
            rx = _find(parent, x)
            ry = _find(parent, y)
            if rx != ry:
                if rx < ry:
                    parent[ry] = rx
                else:
                    parent[rx] = ry
                stack[2 * top] = x
                stack[2 * top + 1] = y
                top += 1
        while top > 0:
            top -= 1
            a = stack[2 * top]
            b = stack[2 * top + 1]
            for o in range(len(tabs)):
                k = arities[o]
                if k == 0:
                    continue
                tab = tabs[o]
                t = <idx_t*> tab.data
                count = 1
                for j in range(k - 1):
                    count *= n
                for p in range(k):
                    for i in range(count):
                        ia = 0
                        ib = 0
                        rem = i
                        m = count
                        for j in range(k):
                            if j == p:
                                ia = ia * n + a
                                ib = ib * n + b
                            else:
                                m = m // n
                                digit = rem // m
                                rem = rem - digit * m
                                ia = ia * n + digit
                                ib = ib * n + digit
                        x = t[ia]
                        y = t[ib]
                        rx = _find(parent, x)
                        ry = _find(parent, y)
                        if rx != ry:
                            if rx < ry:
                                parent[ry] = rx
                            else:
                                parent[rx] = ry
                            stack[2 * top] = x
                            stack[2 * top + 1] = y
                            top += 1
        for i in range(n):
            par[i] = _find(parent, i)
    finally:
        free(stack)
    return par


def propagate(Py_ssize_t n_src, Py_ssize_t n_dst, ops_src, ops_dst, cnp.ndarray[idx_t, ndim=1] hmap):
    cdef idx_t* h = <idx_t*> hmap.data
    cdef idx_t* ts
    cdef idx_t* td
    cdef Py_ssize_t o, k, j, i, count
    cdef idx_t rem, digit, m, x, y, img, di
    cdef bint changed, complete
    cdef cnp.ndarray[idx_t, ndim=1] tab_s, tab_d
    arities = [int(kk) for kk, _ in ops_src]
    srcs = [np.ascontiguousarray(tt, dtype=np.int64) for _, tt in ops_src]
    dsts = [np.ascontiguousarray(tt, dtype=np.int64) for _, tt in ops_dst]
    while True:
        changed = False
        for o in range(len(srcs)):
            k = arities[o]
            tab_s = srcs[o]
            tab_d = dsts[o]
            ts = <idx_t*> tab_s.data
            td = <idx_t*> tab_d.data
            count = 1
            for j in range(k):
                count *= n_src
            for i in range(count):
                rem = i
                m = count
                di = 0
                complete = True
                for j in range(k):
                    m = m // n_src
                    digit = rem // m
                    rem = rem - digit * m
                    img = h[digit]
                    if img < 0:
                        complete = False
                        break
                    di = di * n_dst + img
                if not complete:
                    continue
                x = ts[i]
                y = td[di]
                if h[x] < 0:
                    h[x] = y
                    changed = True
                elif h[x] != y:
                    return False
        if not changed:
            return True
