"""Homomorphism search: enumeration, isomorphism, separation."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .algebra import INDEX, AlgebraError, FiniteAlgebra, Homomorphism, subalgebra_generated


def _ops(alg: FiniteAlgebra):
    return [(k, alg.tables[s]) for s, k in alg.sig]


def _require_same_signature(A: FiniteAlgebra, B: FiniteAlgebra) -> None:
    if A.sig != B.sig:
        raise AlgebraError(f"signature mismatch: {A.name} {A.sig.names} vs {B.name} {B.sig.names}")


def generating_set(alg: FiniteAlgebra, exhaustive_below: int = 40) -> list[int]:
    """A small generating set.

    Small algebras get the greedy choice that maximizes each closure step;
    larger ones take the first element outside the current closure.
    """
    current = subalgebra_generated(alg, [])
    gens: list[int] = []
    while len(current) < alg.size:
        outside = sorted(set(range(alg.size)) - set(current))
        if alg.size <= exhaustive_below:
            best, best_cl = None, None
            for a in outside:
                cl = subalgebra_generated(alg, current + [a])
                if best_cl is None or len(cl) > len(best_cl):
                    best, best_cl = a, cl
        else:
            best = outside[0]
            best_cl = subalgebra_generated(alg, current + [best])
        gens.append(best)
        current = best_cl
    return gens


def extend_generators(A: FiniteAlgebra, B: FiniteAlgebra, gens, images) -> Homomorphism | None:
    """The unique homomorphism sending ``gens`` to ``images``, if one exists and is total."""
    _require_same_signature(A, B)
    hmap = np.full(A.size, -1, dtype=INDEX)
    for g, im in zip(gens, images):
        if hmap[g] >= 0 and hmap[g] != im:
            return None
        hmap[g] = im
    if not _kernels.propagate(A.size, B.size, _ops(A), _ops(B), hmap):
        return None
    if (hmap < 0).any():
        return None
    return Homomorphism(A, B, tuple(int(x) for x in hmap))


@dataclass
class HomSearch:
    homs: list[Homomorphism] = field(default_factory=list)
    truncated: bool = False


def enumerate_homomorphisms(A: FiniteAlgebra, B: FiniteAlgebra, limit: int | None = None,
                            injective: bool = False, candidates=None) -> HomSearch:
    """All homomorphisms A -> B by backtracking over images of a generating set.

    Results are sorted by their maps. ``candidates[g]`` may restrict the
    images tried for generator ``g``.
    """
    _require_same_signature(A, B)
    gens = generating_set(A)
    ops_a, ops_b = _ops(A), _ops(B)
    out = HomSearch()

    def rec(i: int, hmap: np.ndarray):
        if limit is not None and len(out.homs) >= limit:
            out.truncated = True
            return
        if i == len(gens):
            if (hmap < 0).any():
                return
            if injective and len(set(hmap.tolist())) != A.size:
                return
            out.homs.append(Homomorphism(A, B, tuple(int(x) for x in hmap)))
            return
        g = gens[i]
        if hmap[g] >= 0:
            rec(i + 1, hmap)
            return
        opts = range(B.size) if candidates is None else candidates[g]
        for b in opts:
            trial = hmap.copy()
            trial[g] = b
            if not _kernels.propagate(A.size, B.size, ops_a, ops_b, trial):
                continue
            if injective:
                vals = trial[trial >= 0]
                if len(np.unique(vals)) != vals.size:
                    continue
            rec(i + 1, trial)
            if limit is not None and len(out.homs) >= limit:
                out.truncated = True
                return

    start = np.full(A.size, -1, dtype=INDEX)
    if _kernels.propagate(A.size, B.size, ops_a, ops_b, start):
        rec(0, start)
    out.homs.sort(key=lambda h: h.map)
    for h in out.homs:
        if not h.is_valid():
            raise AssertionError(f"hom search produced a non-homomorphism {h}")
    return out


def _output_profile(alg: FiniteAlgebra) -> tuple:
    prof = []
    for sym, k in alg.sig:
        counts = np.bincount(alg.tables[sym], minlength=alg.size)
        prof.append((sym, tuple(sorted(counts.tolist()))))
    return tuple(prof)


def _row_ids(rows: np.ndarray) -> np.ndarray:
    _, ids = np.unique(rows, axis=0, return_inverse=True)
    return ids.reshape(-1).astype(INDEX)


def find_isomorphism(A: FiniteAlgebra, B: FiniteAlgebra) -> Homomorphism | None:
    _require_same_signature(A, B)
    if A.size != B.size or _output_profile(A) != _output_profile(B):
        return None
    if A.same_tables(B):
        return Homomorphism(A, B, tuple(range(A.size)))
    # joint refinement keeps colour ids comparable across the two algebras
    ca, cb = _joint_colors(A, B)
    if sorted(ca.tolist()) != sorted(cb.tolist()):
        return None
    by_color: dict[int, list[int]] = {}
    for b, c in enumerate(cb.tolist()):
        by_color.setdefault(c, []).append(b)
    candidates = {a: by_color.get(int(ca[a]), []) for a in range(A.size)}
    res = enumerate_homomorphisms(A, B, limit=1, injective=True, candidates=candidates)
    if not res.homs:
        return None
    h = res.homs[0]
    inv = [0] * B.size
    for a, b in enumerate(h.map):
        inv[b] = a
    if not Homomorphism(B, A, tuple(inv)).is_valid():
        raise AssertionError("isomorphism inverse is not a homomorphism")
    return h


def _joint_colors(A: FiniteAlgebra, B: FiniteAlgebra):
    """Refine colours on the disjoint union so A and B colours share ids."""
    n = A.size
    tables = {}
    for s, k in A.sig:
        if k not in (1, 2):
            continue
        # block-diagonal table on 2n elements; cross arguments map into A's copy
        idx = np.indices((2 * n,) * k).reshape(k, -1)
        side = idx // n
        same = (side == side[0]).all(axis=0)
        local = idx % n
        flat = np.zeros(idx.shape[1], dtype=INDEX)
        for j in range(k):
            flat = flat * n + local[j]
        out = np.where(side[0] == 0, A.tables[s][flat], B.tables[s][flat] + n)
        out = np.where(same, out, 0)
        tables[s] = (k, out)
    n2 = 2 * n
    color = np.zeros(n2, dtype=INDEX)
    for s, k in A.sig:
        if k == 0:
            color[A.tables[s][0]] += 1
            color[B.tables[s][0] + n] += 1
    for _ in range(6):
        feats = [color]
        for s, (k, tab) in tables.items():
            if k == 1:
                feats.append(color[tab])
            elif k == 2:
                T = tab.reshape(n2, n2)
                c = int(color.max()) + 1
                blocks = []
                for part in (slice(0, n), slice(n, n2)):
                    sub = T[part, part]
                    cs = color[part]
                    diag = sub[np.arange(n), np.arange(n)]
                    rows = np.sort(cs[None, :] * c + color[sub], axis=1)
                    cols = np.sort(cs[None, :] * c + color[sub.T], axis=1)
                    blocks.append((color[diag], rows, cols))
                feats.append(np.concatenate([blocks[0][0], blocks[1][0]]))
                feats.append(_row_ids(np.concatenate([blocks[0][1], blocks[1][1]])))
                feats.append(_row_ids(np.concatenate([blocks[0][2], blocks[1][2]])))
        new = _row_ids(np.stack(feats, axis=1))
        stable = len(np.unique(new)) == len(np.unique(color))
        color = new
        if stable:
            break
    return color[:n], color[n:]


def separates_into(A: FiniteAlgebra, members, limit: int = 10_000):
    """Check that homomorphisms into ``members`` separate the points of ``A``.

    Returns ``(True, witnesses)`` with one ``(member_index, hom)`` per pair, or
    ``(False, (a, b))`` for the first pair no homomorphism distinguishes.
    """
    members = list(members)
    all_homs = []
    for i, M in enumerate(members):
        _require_same_signature(A, M)
        for h in enumerate_homomorphisms(A, M, limit=limit).homs:
            all_homs.append((i, h))
    witnesses = {}
    for a in range(A.size):
        for b in range(a + 1, A.size):
            hit = next(((i, h) for i, h in all_homs if h.map[a] != h.map[b]), None)
            if hit is None:
                return False, (a, b)
            witnesses[(a, b)] = hit
    return True, witnesses
