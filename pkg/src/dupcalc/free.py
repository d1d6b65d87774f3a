"""Free algebras of finitely generated varieties.

F_V(N)(k) is realized inside the direct product of N over every assignment
of the k generators into every member N: an element is the vector of values
a term takes under all those assignments. Generation starts from the k
projection vectors (plus constants) and closes under the operations,
hash-consing vectors by their bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Sequence

import numpy as np

from .algebra import INDEX, AlgebraError, FiniteAlgebra, Homomorphism, ResourceError, all_tuples
from .homs import extend_generators
from .terms import App, Term, Var, render_term

DEFAULT_FREE_CAP = 100_000
_CHUNK = 1 << 18


class FreeCapError(ResourceError):
    def __init__(self, message: str, reached: int):
        super().__init__(message)
        self.reached = reached


@dataclass(frozen=True, eq=False)
class FreeAlgebraResult:
    algebra: FiniteAlgebra
    generators: tuple[int, ...]
    embedding: np.ndarray          # shape (size, total assignments)
    terms: tuple[Term, ...]        # a minimal-depth term per element
    slices: tuple[tuple[int, int], ...]  # column range of each class member
    members: tuple[FiniteAlgebra, ...]

    @property
    def size(self) -> int:
        return self.algebra.size

    def evaluation(self, member: int, assignment: Sequence[int]) -> Homomorphism:
        """The homomorphism F -> members[member] sending generator i to ``assignment[i]``."""
        lo, hi = self.slices[member]
        n = self.members[member].size
        k = len(self.generators)
        col = lo + int(sum(int(a) * n ** (k - 1 - j) for j, a in enumerate(assignment)))
        return Homomorphism(self.algebra, self.members[member],
                            tuple(int(v) for v in self.embedding[:, col]))


def _apply(members, slices, sym, arg_rows: list[np.ndarray]) -> np.ndarray:
    """Apply ``sym`` coordinatewise to stacked element vectors (rows)."""
    out = np.empty_like(arg_rows[0]) if arg_rows else None
    for N, (lo, hi) in zip(members, slices):
        out[:, lo:hi] = N.apply_vec(sym, [a[:, lo:hi] for a in arg_rows])
    return out


def free_algebra(members: Sequence[FiniteAlgebra], k: int, cap: int = DEFAULT_FREE_CAP,
                 name: str | None = None) -> FreeAlgebraResult:
    """The k-generated free algebra of the variety generated by ``members``."""
    members = list(members)
    if not members:
        raise AlgebraError("free algebra needs a non-empty generating class")
    sig = members[0].sig
    for N in members[1:]:
        if N.sig != sig:
            raise AlgebraError(f"{N.name} has a different signature from {members[0].name}")
    if k < 0:
        raise AlgebraError("number of generators must be non-negative")

    slices, cols, lo = [], [], 0
    for N in members:
        a = all_tuples(N.size, k)
        slices.append((lo, lo + a.shape[0]))
        cols.append(a)
        lo += a.shape[0]
    width = lo

    vecs: list[np.ndarray] = []
    terms: list[Term] = []
    index: dict[bytes, int] = {}

    def add(v: np.ndarray, t: Term) -> int:
        key = v.tobytes()
        got = index.get(key)
        if got is not None:
            return got
        if len(vecs) >= cap:
            raise FreeCapError(f"free algebra exceeds cap {cap} (reached {len(vecs)} elements)",
                               len(vecs))
        index[key] = len(vecs)
        vecs.append(v)
        terms.append(t)
        return len(vecs) - 1

    gens = []
    for i in range(k):
        v = np.concatenate([c[:, i] for c in cols]).astype(INDEX) if width else np.zeros(0, INDEX)
        gens.append(add(v, Var(i + 1)))
    for sym, ar in sig:
        if ar == 0:
            v = np.concatenate([np.full(hi - lo, N.tables[sym][0], dtype=INDEX)
                                for N, (lo, hi) in zip(members, slices)])
            add(v, App(sym))

    ops = [(s, a) for s, a in sig if a > 0]
    done = 0
    while done < len(vecs):
        old, top = done, len(vecs)
        mat = np.stack(vecs[:top]) if top else np.zeros((0, width), INDEX)
        for sym, ar in ops:
            # tuples with at least one argument from the frontier [old, top)
            for p in range(ar):
                ranges = [range(0, old)] * p + [range(old, top)] + [range(0, top)] * (ar - p - 1)
                if any(len(r) == 0 for r in ranges):
                    continue
                for combo in _chunks(ranges):
                    res = _apply(members, slices, sym, [mat[c] for c in combo])
                    for row, idx in zip(res, zip(*combo)):
                        if row.tobytes() not in index:
                            add(row.copy(), App(sym, tuple(terms[int(i)] for i in idx)))
        done = top

    size = len(vecs)
    emb = np.stack(vecs) if size else np.zeros((0, width), INDEX)
    tables = {}
    for sym, ar in sig:
        if ar == 0:
            tables[sym] = np.array([index[_const_key(members, slices, sym)]], dtype=INDEX)
            continue
        total = size ** ar
        out = np.empty(total, dtype=INDEX)
        tup = all_tuples(size, ar)
        for start in range(0, total, max(1, _CHUNK // max(1, width))):
            stop = min(total, start + max(1, _CHUNK // max(1, width)))
            res = _apply(members, slices, sym, [emb[tup[start:stop, j]] for j in range(ar)])
            out[start:stop] = [index[r.tobytes()] for r in res]
        tables[sym] = out
    labels = tuple(render_term(t) for t in terms)
    alg = FiniteAlgebra(name or f"F({','.join(N.name for N in members)};{k})", sig, size,
                        tables, labels)
    return FreeAlgebraResult(alg, tuple(gens), emb, tuple(terms), tuple(slices), tuple(members))


def _const_key(members, slices, sym) -> bytes:
    return np.concatenate([np.full(hi - lo, N.tables[sym][0], dtype=INDEX)
                           for N, (lo, hi) in zip(members, slices)]).tobytes()


def _chunks(ranges):
    """Index arrays for the cartesian product of ``ranges``, in bounded chunks."""
    first, rest = ranges[0], ranges[1:]
    rest_grid = [np.array(c, dtype=np.int64) for c in zip(*iproduct(*rest))] if rest else []
    rest_n = len(rest_grid[0]) if rest else 1
    per = max(1, _CHUNK // max(1, rest_n))
    for s in range(first.start, first.stop, per):
        head = np.arange(s, min(first.stop, s + per), dtype=np.int64)
        combo = [np.repeat(head, rest_n)] + [np.tile(g, head.size) for g in rest_grid]
        yield combo


def universal_property_holds(result: FreeAlgebraResult, N: FiniteAlgebra) -> tuple[bool, object]:
    """Every map of the generators into ``N`` extends to exactly one homomorphism.

    Uniqueness is automatic because the generators generate; existence is
    checked by propagation for every one of the |N|^k maps. Returns
    ``(True, count)`` or ``(False, failing_assignment)``.
    """
    k = len(result.generators)
    count = 0
    for images in iproduct(range(N.size), repeat=k):
        if extend_generators(result.algebra, N, list(result.generators), list(images)) is None:
            return False, images
        count += 1
    return True, count
