"""Finite algebras stored as flattened operation tables.

A table for a ``k``-ary symbol on ``n`` elements has length ``n**k``; the
entry for ``(a1, ..., ak)`` sits at ``sum(a_j * n**(k-1-j))`` (row-major,
leftmost argument most significant). This convention is also the file format.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .terms import Signature

INDEX = np.int64


class AlgebraError(ValueError):
    pass


class ResourceError(RuntimeError):
    """A configured size or evaluation cap was exceeded."""


def _freeze(arr) -> np.ndarray:
    a = np.ascontiguousarray(arr, dtype=INDEX)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    name: str
    sig: Signature
    size: int
    tables: Mapping[str, np.ndarray]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise AlgebraError("algebra must have at least one element")
        frozen = {}
        for sym, arity in self.sig:
            if sym not in self.tables:
                raise AlgebraError(f"{self.name}: missing table for {sym}")
            tab = _freeze(self.tables[sym]).reshape(-1)
            if tab.size != self.size ** arity:
                raise AlgebraError(
                    f"{self.name}: table for {sym} has length {tab.size}, "
                    f"expected {self.size ** arity}")
            if tab.size and (tab.min() < 0 or tab.max() >= self.size):
                raise AlgebraError(f"{self.name}: table for {sym} has out-of-range entries")
            frozen[sym] = tab
        extra = set(self.tables) - set(self.sig.names)
        if extra:
            raise AlgebraError(f"{self.name}: tables for symbols outside signature: {sorted(extra)}")
        object.__setattr__(self, "tables", frozen)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.size:
                raise AlgebraError(f"{self.name}: {len(labels)} labels for {self.size} elements")
            object.__setattr__(self, "labels", labels)

    # --- access -----------------------------------------------------------

    def arity(self, sym: str) -> int:
        return self.sig.arity(sym)

    def apply(self, sym: str, args: Sequence[int]) -> int:
        if sym not in self.tables:
            raise AlgebraError(f"{self.name} has no operation {sym!r}")
        k = self.arity(sym)
        if len(args) != k:
            raise AlgebraError(f"{sym} takes {k} arguments, got {len(args)}")
        idx = 0
        for a in args:
            idx = idx * self.size + int(a)
        return int(self.tables[sym][idx])

    def apply_vec(self, sym: str, args: Sequence[np.ndarray]) -> np.ndarray:
        if sym not in self.tables:
            raise AlgebraError(f"{self.name} has no operation {sym!r}")
        tab = self.tables[sym]
        if not args:
            return tab[0]
        idx = np.asarray(args[0], dtype=INDEX)
        for a in args[1:]:
            idx = idx * self.size + np.asarray(a, dtype=INDEX)
        return tab[idx]

    def cube(self, sym: str) -> np.ndarray:
        """Table reshaped to ``(n,) * arity``."""
        k = self.arity(sym)
        return self.tables[sym].reshape((self.size,) * k) if k else self.tables[sym].reshape(())

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def element(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def constants(self) -> list[int]:
        return sorted({int(self.tables[s][0]) for s, k in self.sig if k == 0})

    def reduct(self, names: Sequence[str], name: str | None = None) -> "FiniteAlgebra":
        sig = self.sig.restrict(names)
        return FiniteAlgebra(name or self.name, sig, self.size,
                             {s: self.tables[s] for s in sig.names}, self.labels)

    def rename(self, mapping: Mapping[str, str], name: str | None = None) -> "FiniteAlgebra":
        sig = Signature(tuple((mapping.get(s, s), k) for s, k in self.sig))
        return FiniteAlgebra(name or self.name, sig, self.size,
                             {mapping.get(s, s): t for s, t in self.tables.items()}, self.labels)

    def with_name(self, name: str) -> "FiniteAlgebra":
        return FiniteAlgebra(name, self.sig, self.size, self.tables, self.labels)

    def same_tables(self, other: "FiniteAlgebra") -> bool:
        return (self.sig == other.sig and self.size == other.size
                and all(np.array_equal(self.tables[s], other.tables[s]) for s in self.sig.names))

    def __repr__(self):
        return f"FiniteAlgebra({self.name!r}, size={self.size}, ops={self.sig.names})"

    # --- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        out = {"name": self.name, "signature": self.sig.to_json(), "size": self.size}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        out["ops"] = {s: self.tables[s].tolist() for s in self.sig.names}
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "FiniteAlgebra":
        try:
            sig = Signature.from_json(data["signature"])
            return cls(data["name"], sig, int(data["size"]),
                       {k: np.asarray(v) for k, v in data["ops"].items()},
                       tuple(data["labels"]) if data.get("labels") is not None else None)
        except KeyError as exc:
            raise AlgebraError(f"algebra file missing field {exc}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def from_functions(name: str, sig: Signature, elements: Sequence,
                   funcs: Mapping[str, Callable], labels: Sequence[str] | None = None) -> FiniteAlgebra:
    """Tabulate Python callables over explicit element values.

    ``elements`` are arbitrary hashable values (e.g. tuples); each callable
    receives element values and must return one of them.
    """
    pos = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    tables = {}
    for sym, k in sig:
        f = funcs[sym]
        tab = np.empty(n ** k, dtype=INDEX)
        for i, args in enumerate(itertools.product(elements, repeat=k)):
            tab[i] = pos[f(*args)]
        tables[sym] = tab
    if labels is None:
        labels = [_label(e) for e in elements]
    return FiniteAlgebra(name, sig, n, tables, tuple(labels))


def _label(e) -> str:
    if isinstance(e, tuple):
        return "(" + ",".join(_label(x) for x in e) + ")"
    return str(e)


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: FiniteAlgebra
    target: FiniteAlgebra
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_valid(self) -> bool:
        return is_homomorphism(self.source, self.target, self.map)

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """``self`` after ``other``."""
        return Homomorphism(other.source, self.target, tuple(self.map[b] for b in other.map))

    def __repr__(self):
        return f"Homomorphism({self.source.name} -> {self.target.name}, {list(self.map)})"


def all_tuples(n: int, k: int) -> np.ndarray:
    """All ``k``-tuples over ``range(n)`` in row-major order, shape ``(n**k, k)``."""
    if k == 0:
        return np.zeros((1, 0), dtype=INDEX)
    grids = np.indices((n,) * k, dtype=INDEX).reshape(k, -1)
    return grids.T.copy()


def is_homomorphism(A: FiniteAlgebra, B: FiniteAlgebra, mapping: Sequence[int]) -> bool:
    if A.sig != B.sig:
        return False
    h = np.asarray(mapping, dtype=INDEX)
    if h.shape != (A.size,) or (h.size and (h.min() < 0 or h.max() >= B.size)):
        return False
    for sym, k in A.sig:
        args = all_tuples(A.size, k)
        lhs = h[A.tables[sym]]
        rhs = B.apply_vec(sym, [h[args[:, j]] for j in range(k)]) if k else B.tables[sym][0]
        if not np.array_equal(lhs, np.broadcast_to(rhs, lhs.shape)):
            return False
    return True


def _check_same_signature(algs: Sequence[FiniteAlgebra]) -> None:
    for a in algs[1:]:
        if a.sig != algs[0].sig:
            raise AlgebraError(f"signature mismatch between {algs[0].name} and {a.name}")


def direct_product(factors: Sequence[FiniteAlgebra], sig: Signature | None = None,
                   name: str | None = None) -> FiniteAlgebra:
    """Componentwise product; elements ordered lexicographically by factor."""
    factors = list(factors)
    if not factors:
        if sig is None:
            raise AlgebraError("empty product needs an explicit signature")
        return FiniteAlgebra(name or "1", sig, 1, {s: np.zeros(1, dtype=INDEX) for s, _ in sig}, ("()",))
    _check_same_signature(factors)
    sig = factors[0].sig
    sizes = [f.size for f in factors]
    n = int(np.prod(sizes))
    coords = product_coordinates(sizes)
    tables = {}
    for sym, k in sig:
        args = all_tuples(n, k)
        out = np.zeros(n ** k, dtype=INDEX)
        for j, fac in enumerate(factors):
            cj = fac.apply_vec(sym, [coords[j][args[:, i]] for i in range(k)])
            out = out * fac.size + cj
        tables[sym] = out
    labels = ["(" + ",".join(factors[j].label(int(coords[j, e])) for j in range(len(factors))) + ")"
              for e in range(n)]
    return FiniteAlgebra(name or " x ".join(f.name for f in factors), sig, n, tables, tuple(labels))


def product_coordinates(sizes: Sequence[int]) -> np.ndarray:
    """``coords[j, e]``: j-th coordinate of product element ``e``."""
    return np.indices(tuple(sizes), dtype=INDEX).reshape(len(sizes), -1)


def dual_of(alg: FiniteAlgebra, swaps: Sequence[tuple[str, str]], name: str | None = None) -> FiniteAlgebra:
    """Exchange the tables of each listed pair of symbols (e.g. meet/join, zero/one)."""
    tables = dict(alg.tables)
    for a, b in swaps:
        if alg.arity(a) != alg.arity(b):
            raise AlgebraError(f"cannot swap {a} and {b}: arities differ")
        tables[a], tables[b] = alg.tables[b], alg.tables[a]
    return FiniteAlgebra(name or f"{alg.name}^d", alg.sig, alg.size, tables, alg.labels)


def combine_reducts(name: str, parts: Sequence[tuple[FiniteAlgebra, Mapping[str, str]]],
                    extra: Mapping[str, tuple[int, np.ndarray]] | None = None,
                    labels: Sequence[str] | None = None) -> FiniteAlgebra:
    """Assemble an algebra from reducts of algebras on one common universe.

    Each part contributes ``{new_symbol: source_symbol}``; ``extra`` adds raw
    ``(arity, table)`` operations.
    """
    size = parts[0][0].size
    syms, tables = [], {}
    for alg, mapping in parts:
        if alg.size != size:
            raise AlgebraError("reducts live on universes of different sizes")
        for new, old in mapping.items():
            syms.append((new, alg.arity(old)))
            tables[new] = alg.tables[old]
    for new, (k, tab) in (extra or {}).items():
        syms.append((new, k))
        tables[new] = tab
    if labels is None:
        labels = parts[0][0].labels
    return FiniteAlgebra(name, Signature(tuple(syms)), size, tables, labels)


def unary_table(alg_size: int, f: Callable[[int], int]) -> np.ndarray:
    return np.array([f(a) for a in range(alg_size)], dtype=INDEX)


def subalgebra_generated(alg: FiniteAlgebra, seed) -> list[int]:
    """Least subuniverse containing ``seed`` and every constant."""
    inside = np.zeros(alg.size, dtype=bool)
    for a in seed:
        if not 0 <= a < alg.size:
            raise AlgebraError(f"element {a} outside universe of {alg.name}")
        inside[a] = True
    for c in alg.constants():
        inside[c] = True
    ops = [(s, k) for s, k in alg.sig if k > 0]
    while True:
        cur = np.flatnonzero(inside)
        if cur.size == 0:
            break
        grown = inside.copy()
        for sym, k in ops:
            grid = np.meshgrid(*([cur] * k), indexing="ij")
            grown[alg.apply_vec(sym, [g.ravel() for g in grid])] = True
        if grown.sum() == inside.sum():
            break
        inside = grown
    return [int(a) for a in np.flatnonzero(inside)]


def is_subuniverse(alg: FiniteAlgebra, subset) -> bool:
    s = sorted(set(int(a) for a in subset))
    return subalgebra_generated(alg, s) == s if s or alg.constants() else True


def subalgebra(alg: FiniteAlgebra, subset, name: str | None = None) -> tuple[FiniteAlgebra, list[int]]:
    """The subalgebra on a subuniverse, with the inclusion map as element list."""
    elems = sorted(set(int(a) for a in subset))
    if subalgebra_generated(alg, elems) != elems:
        raise AlgebraError("subset is not closed under the operations")
    pos = {e: i for i, e in enumerate(elems)}
    idx = np.array(elems, dtype=INDEX)
    tables = {}
    for sym, k in alg.sig:
        args = all_tuples(len(elems), k)
        vals = alg.apply_vec(sym, [idx[args[:, j]] for j in range(k)]) if k else np.array([alg.tables[sym][0]])
        tables[sym] = np.array([pos[int(v)] for v in np.atleast_1d(vals)], dtype=INDEX)
    labels = tuple(alg.label(e) for e in elems)
    return FiniteAlgebra(name or f"sub({alg.name})", alg.sig, len(elems), tables, labels), elems


def all_subuniverses(alg: FiniteAlgebra, max_size: int = 16) -> list[tuple[int, ...]]:
    """Every subuniverse (brute force over subsets; small algebras only)."""
    if alg.size > max_size:
        raise ResourceError(f"subuniverse enumeration capped at {max_size} elements")
    found = set()
    for mask in range(1 << alg.size):
        s = [a for a in range(alg.size) if mask >> a & 1]
        closed = subalgebra_generated(alg, s) if (s or alg.constants()) else []
        if closed == s:
            found.add(tuple(s))
    return sorted(found, key=lambda t: (len(t), t))


class InputError(ValueError):
    """Malformed input file; the message carries line and column when known."""


def load_json_text(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_algebra(path) -> FiniteAlgebra:
    with open(path, encoding="utf-8") as fh:
        data = load_json_text(fh.read(), str(path))
    try:
        return FiniteAlgebra.from_json(data)
    except (AlgebraError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None
