"""Exact closure search over Gamma-term operations of duplicated algebras.

A k-ary Gamma-term is represented by its behaviour on a fixed finite
domain of argument tuples, one block per class member. Starting from the
projections (and the closed terms), pointwise application of the entries is
iterated breadth first; every new behaviour keeps the first term that
produced it, so witnesses have minimal depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .algebra import INDEX, FiniteAlgebra, all_tuples
from .duplicator import Duplicator, decode, duplicate, encode
from .terms import App, Term, Var

DIAGONAL = "diagonal"
FULL = "full"
DEFAULT_BUDGET = 20_000
DOMAIN_CAP = 2_000_000

FOUND, EXHAUSTED, CAPPED = "found", "exhausted", "capped"


@dataclass
class Domain:
    """Argument tuples on which behaviours are compared.

    ``cols[i]`` holds the code (element of P_Gamma(N)) of argument ``i`` at
    every point; ``blocks`` slices the concatenated vector by class member.
    """

    members: list[FiniteAlgebra]
    duplicates: list[FiniteAlgebra]
    k: int
    restriction: str
    cols: list[np.ndarray]
    blocks: list[slice]
    base_cols: list[list[np.ndarray]] = field(default_factory=list)

    @property
    def size(self) -> int:
        return int(self.cols[0].size) if self.cols else sum(b.stop - b.start for b in self.blocks)


def domain_size(g: Duplicator, members: Sequence[FiniteAlgebra], k: int, restriction: str) -> int:
    if restriction == DIAGONAL:
        return sum(N.size ** k for N in members)
    return sum(N.size ** (g.m * k) for N in members)


def build_domain(g: Duplicator, members: Sequence[FiniteAlgebra], k: int, restriction: str,
                 duplicates: Sequence[FiniteAlgebra] | None = None) -> Domain:
    members = list(members)
    dups = list(duplicates) if duplicates is not None else [duplicate(g, N) for N in members]
    cols: list[list[np.ndarray]] = [[] for _ in range(k)]
    base_cols: list[list[np.ndarray]] = []
    blocks = []
    start = 0
    for N, P in zip(members, dups):
        if restriction == DIAGONAL:
            pts = all_tuples(N.size, k)
            bc = [pts[:, i] for i in range(k)]
            codes = [encode([pts[:, i]] * g.m, N.size) for i in range(k)]
        elif restriction == FULL:
            pts = all_tuples(P.size, k)
            codes = [pts[:, i] for i in range(k)]
            bc = []
            for i in range(k):
                bc.extend(decode(pts[:, i], N.size, g.m))
        else:
            raise ValueError(f"unknown restriction {restriction!r}")
        for i in range(k):
            cols[i].append(codes[i])
        base_cols.append(bc)
        rows = pts.shape[0]
        blocks.append(slice(start, start + rows))
        start += rows
    flat = [np.concatenate(c) if c else np.zeros(0, dtype=INDEX) for c in cols]
    return Domain(members, dups, k, restriction, flat, blocks, base_cols)


@dataclass
class CloneResult:
    status: str
    term: Term | None
    explored: int
    depth: int
    behaviours: list[Term] = field(default_factory=list)

    def certificate(self) -> str:
        if self.status == EXHAUSTED:
            return f"closure exhausted: {self.explored} distinct behaviours up to depth {self.depth}"
        if self.status == CAPPED:
            return f"search capped after {self.explored} behaviours at depth {self.depth}"
        return f"found at depth {self.depth} after {self.explored} behaviours"


def _apply(dom: Domain, entry: str, arity: int, args: Sequence[np.ndarray]) -> np.ndarray:
    """Entry applied pointwise; ``args`` may carry a leading batch axis."""
    shape = np.broadcast_shapes(*[a.shape for a in args]) if args else (dom.size,)
    out = np.empty(shape, dtype=INDEX)
    for P, blk in zip(dom.duplicates, dom.blocks):
        tab = P.tables[entry]
        if arity == 0:
            out[..., blk] = tab[0]
            continue
        idx = np.asarray(args[0][..., blk], dtype=INDEX)
        for a in args[1:]:
            idx = idx * P.size + a[..., blk]
        out[..., blk] = tab[idx]
    return out


def closure_search(g: Duplicator, members: Sequence[FiniteAlgebra], k: int,
                   restriction: str = FULL, target=None, budget: int = DEFAULT_BUDGET,
                   max_depth: int | None = None, duplicates=None,
                   keep_terms: bool = False) -> CloneResult:
    """Breadth-first closure; stops at the first behaviour accepted by ``target``.

    ``target`` is an exact behaviour vector, a callable mapping a 2-D array of
    behaviours to a boolean mask, or None to compute the whole closure.
    """
    if budget <= 0:
        return CloneResult(CAPPED, None, 0, 0)
    if domain_size(g, members, k, restriction) > DOMAIN_CAP:
        return CloneResult(CAPPED, None, 0, 0)
    dom = build_domain(g, members, k, restriction, duplicates)
    matcher = _matcher(target)

    seen: dict[bytes, int] = {}
    vecs: list[np.ndarray] = []
    terms: list[Term] = []

    def add_batch(rows: np.ndarray, make_term: Callable[[int], Term]):
        """Register new rows; returns (hit term or None, capped flag)."""
        if rows.ndim == 1:
            rows = rows[None, :]
        if matcher is not None:
            mask = matcher(rows)
        for r in range(rows.shape[0]):
            key = rows[r].tobytes()
            if key in seen:
                continue
            if len(vecs) >= budget:
                return None, True
            t = make_term(r)
            seen[key] = len(vecs)
            vecs.append(rows[r].copy())
            terms.append(t)
            if matcher is not None and mask[r]:
                return t, False
        return None, False

    def result(status, term, depth):
        return CloneResult(status, term, len(vecs), depth, list(terms) if keep_terms else [])

    # level 0: projections and closed entries
    for i in range(k):
        hit, cap = add_batch(dom.cols[i], lambda r, i=i: Var(i + 1))
        if hit is not None:
            return result(FOUND, hit, 0)
        if cap:
            return result(CAPPED, None, 0)
    for e in g.entries:
        if e.arity == 0:
            hit, cap = add_batch(_apply(dom, e.name, 0, []), lambda r, e=e: App(e.name))
            if hit is not None:
                return result(FOUND, hit, 1)
            if cap:
                return result(CAPPED, None, 1)

    new_lo, depth = 0, 0
    while new_lo < len(vecs):
        if max_depth is not None and depth >= max_depth:
            return result(CAPPED, None, depth)
        depth += 1
        hi = len(vecs)
        all_arr = np.stack(vecs[:hi])
        for e in g.entries:
            if e.arity == 0:
                continue
            for combo in _seminaive(e.arity, new_lo, hi):
                fixed = combo[:-1]
                lo_last, hi_last = combo[-1]
                for prefix in _product(fixed):
                    args = [vecs[p][None, :] for p in prefix] + [all_arr[lo_last:hi_last]]
                    rows = _apply(dom, e.name, e.arity, args)
                    hit, cap = add_batch(
                        rows, lambda r, prefix=prefix, lo_last=lo_last, e=e: App(
                            e.name, tuple(terms[p] for p in prefix) + (terms[lo_last + r],)))
                    if hit is not None:
                        return result(FOUND, hit, depth)
                    if cap:
                        return result(CAPPED, None, depth)
        new_lo = hi
    return result(EXHAUSTED, None, depth)


def _seminaive(arity: int, lo: int, hi: int):
    """Index ranges covering every arity-tuple over [0, hi) with some entry in [lo, hi)."""
    out = []
    for p in range(arity):
        ranges = [(0, lo)] * p + [(lo, hi)] + [(0, hi)] * (arity - p - 1)
        if any(a == b for a, b in ranges):
            continue
        out.append(ranges)
    return out


def _product(ranges):
    if not ranges:
        yield ()
        return
    (a, b), rest = ranges[0], ranges[1:]
    for i in range(a, b):
        for tail in _product(rest):
            yield (i,) + tail


def _matcher(target):
    if target is None:
        return None
    if callable(target):
        return target
    vec = np.asarray(target, dtype=INDEX)
    return lambda rows: np.all(rows == vec[None, :], axis=1)


def clone_search(g: Duplicator, members: Sequence[FiniteAlgebra], k: int, restriction: str,
                 target, budget: int = DEFAULT_BUDGET, max_depth: int | None = None) -> CloneResult:
    """Look for a Gamma-term whose behaviour matches ``target``."""
    return closure_search(g, members, k, restriction, target, budget, max_depth)


def target_vector(dom: Domain, coord_terms) -> np.ndarray:
    """Behaviour vector of base terms per coordinate (block layout over ``dom``)."""
    from .terms import eval_vec
    parts = []
    for N, bc, blk in zip(dom.members, dom.base_cols, dom.blocks):
        rows = blk.stop - blk.start
        coords = [np.broadcast_to(np.asarray(eval_vec(t, N, bc), dtype=INDEX), (rows,))
                  for t in coord_terms]
        parts.append(encode(coords, N.size))
    return np.concatenate(parts)
