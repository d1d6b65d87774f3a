"""Congruences as least-representative arrays, and congruence lattices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .algebra import INDEX, AlgebraError, FiniteAlgebra, Homomorphism, ResourceError, all_tuples
from .terms import Signature

DEFAULT_CON_CAP = 64


@dataclass(frozen=True)
class Congruence:
    """Partition given by ``rep[a]`` = least element of the block of ``a``."""

    rep: tuple[int, ...]

    @classmethod
    def from_array(cls, arr) -> "Congruence":
        return cls(tuple(int(x) for x in canonical(arr)))

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(tuple(range(n)))

    @classmethod
    def total(cls, n: int) -> "Congruence":
        return cls((0,) * n)

    @property
    def size(self) -> int:
        return len(self.rep)

    def related(self, a: int, b: int) -> bool:
        return self.rep[a] == self.rep[b]

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for a, r in enumerate(self.rep):
            out.setdefault(r, []).append(a)
        return [out[r] for r in sorted(out)]

    def num_blocks(self) -> int:
        return len(set(self.rep))

    def is_identity(self) -> bool:
        return all(r == a for a, r in enumerate(self.rep))

    def is_total(self) -> bool:
        return all(r == 0 for r in self.rep)

    def __le__(self, other: "Congruence") -> bool:
        return all(other.rep[a] == other.rep[r] for a, r in enumerate(self.rep))

    def meet(self, other: "Congruence") -> "Congruence":
        pairs = {}
        out = []
        for a in range(self.size):
            key = (self.rep[a], other.rep[a])
            out.append(pairs.setdefault(key, a))
        return Congruence(tuple(out))

    def __str__(self):
        return "|".join(",".join(map(str, b)) for b in self.blocks())


def canonical(arr) -> np.ndarray:
    """Least-representative form of any block-labelling array."""
    arr = np.asarray(arr)
    first: dict[int, int] = {}
    out = np.empty(arr.size, dtype=INDEX)
    for i, lab in enumerate(arr.tolist()):
        out[i] = first.setdefault(lab, i)
    return out


def _ops(alg: FiniteAlgebra):
    return [(k, alg.tables[s]) for s, k in alg.sig]


def is_compatible(alg: FiniteAlgebra, theta: Congruence) -> bool:
    pairs = [(a, r) for a, r in enumerate(theta.rep) if a != r]
    closed = _kernels.cg_closure(alg.size, _ops(alg), pairs)
    return bool(np.array_equal(canonical(closed), np.asarray(theta.rep)))


def principal_congruence(alg: FiniteAlgebra, a: int, b: int) -> Congruence:
    """Least congruence identifying ``a`` and ``b``."""
    return generated_congruence(alg, [(a, b)])


def generated_congruence(alg: FiniteAlgebra, pairs, base: Congruence | None = None) -> Congruence:
    """Least congruence containing ``pairs`` and the (compatible) ``base``."""
    for a, b in pairs:
        if not (0 <= a < alg.size and 0 <= b < alg.size):
            raise AlgebraError("pair outside universe")
    rep = None if base is None else np.asarray(base.rep, dtype=INDEX)
    return Congruence.from_array(_kernels.cg_closure(alg.size, _ops(alg), list(pairs), rep))


def join(alg: FiniteAlgebra, x: Congruence, y: Congruence) -> Congruence:
    pairs = [(a, r) for a, r in enumerate(y.rep) if a != r]
    return generated_congruence(alg, pairs, base=x)


@dataclass(frozen=True)
class CongruenceLattice:
    algebra_name: str
    congruences: tuple[Congruence, ...]
    leq: np.ndarray

    def __len__(self):
        return len(self.congruences)

    def index(self, theta: Congruence) -> int:
        return self.congruences.index(theta)

    def as_algebra(self, name: str | None = None) -> FiniteAlgebra:
        """The lattice (join = "join", meet = "meet") as a finite algebra."""
        n = len(self.congruences)
        meet = np.empty(n * n, dtype=INDEX)
        jn = np.empty(n * n, dtype=INDEX)
        for i in range(n):
            for j in range(n):
                ups = [k for k in range(n) if self.leq[i, k] and self.leq[j, k]]
                downs = [k for k in range(n) if self.leq[k, i] and self.leq[k, j]]
                jn[i * n + j] = next(k for k in ups if all(self.leq[k, u] for u in ups))
                meet[i * n + j] = next(k for k in downs if all(self.leq[d, k] for d in downs))
        return FiniteAlgebra(name or f"Con({self.algebra_name})",
                             Signature.of(("join", 2), ("meet", 2)), n,
                             {"join": jn, "meet": meet},
                             tuple(str(c) for c in self.congruences))


def _sort_key(c: Congruence):
    return (-c.num_blocks(), c.rep)


def congruence_lattice(alg: FiniteAlgebra, cap: int = DEFAULT_CON_CAP) -> CongruenceLattice:
    """All congruences, as joins of principal ones, in canonical order."""
    if alg.size > cap:
        raise ResourceError(f"{alg.name}: universe of {alg.size} exceeds congruence cap {cap}")
    n = alg.size
    principal = []
    seen = set()
    for a in range(n):
        for b in range(a + 1, n):
            c = principal_congruence(alg, a, b)
            if c not in seen:
                seen.add(c)
                principal.append(c)
    found = {Congruence.identity(n)} | seen
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for p in principal:
                if p <= x:
                    continue
                j = join(alg, x, p)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    cons = sorted(found, key=_sort_key)
    leq = np.array([[x <= y for y in cons] for x in cons], dtype=bool)
    lat = CongruenceLattice(alg.name, tuple(cons), leq)
    for x in cons:
        for y in cons:
            if x.meet(y) not in found:
                raise AlgebraError("congruence set not closed under intersection")
    return lat


def monolith(alg: FiniteAlgebra) -> Congruence | None:
    """Meet of all non-identity congruences, or None when that meet is the identity."""
    if alg.size < 2:
        raise AlgebraError("subdirect irreducibility needs at least two elements")
    m = Congruence.total(alg.size)
    for a in range(alg.size):
        for b in range(a + 1, alg.size):
            m = m.meet(principal_congruence(alg, a, b))
            if m.is_identity():
                return None
    return m


def is_subdirectly_irreducible(alg: FiniteAlgebra) -> tuple[bool, Congruence | None]:
    m = monolith(alg)
    return m is not None, m


def quotient_by(alg: FiniteAlgebra, theta: Congruence,
                name: str | None = None) -> tuple[FiniteAlgebra, Homomorphism]:
    """Quotient algebra (blocks ordered by least member) and its projection."""
    if theta.size != alg.size:
        raise AlgebraError("partition size does not match algebra")
    if not is_compatible(alg, theta):
        raise AlgebraError("partition is not a congruence")
    reps = sorted(set(theta.rep))
    block = {r: i for i, r in enumerate(reps)}
    proj = np.array([block[theta.rep[a]] for a in range(alg.size)], dtype=INDEX)
    repr_arr = np.array(reps, dtype=INDEX)
    m = len(reps)
    tables = {}
    for sym, k in alg.sig:
        args = all_tuples(m, k)
        vals = alg.apply_vec(sym, [repr_arr[args[:, j]] for j in range(k)])
        tables[sym] = proj[np.atleast_1d(vals)]
    labels = tuple("{" + ",".join(alg.label(a) for a in b) + "}" for b in theta.blocks())
    q = FiniteAlgebra(name or f"{alg.name}/theta", alg.sig, m, tables, labels)
    return q, Homomorphism(alg, q, tuple(int(x) for x in proj))


def kernel(h: Homomorphism) -> Congruence:
    return Congruence.from_array(h.map)
