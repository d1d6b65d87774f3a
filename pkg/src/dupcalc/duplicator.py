"""Duplicators: named m-tuples of base terms, and the algebras built from them.

Variable layout: for an entry of Gamma-arity n over m factors, coordinate j
of Gamma-argument i is base variable ``m*(i-1) + j`` (1-based). For m = 2
this is the interleaving a1, b1, a2, b2, ...
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Mapping, Sequence

import numpy as np

from .algebra import INDEX, AlgebraError, FiniteAlgebra, Homomorphism, all_tuples, load_json_text
from .terms import (App, Signature, Term, TermError, Var, check_term, eval_vec, fold,
                    free_variable_span, parse_term, render_term, substitute, term_text,
                    variables)

LINKED = "linked"
DISJOINT = "disjoint"


class DuplicatorError(ValueError):
    pass


@dataclass(frozen=True)
class DuplicatorEntry:
    name: str
    arity: int
    terms: tuple[Term, ...]

    def to_json(self) -> dict:
        return {"name": self.name, "arity": self.arity,
                "terms": [render_term(t) for t in self.terms]}


@dataclass(frozen=True, eq=False)
class Witnesses:
    """Hand-supplied Gamma-terms for the duplicator conditions.

    ``L[symbol][coordinate]`` recovers a base operation on the diagonal,
    ``M`` is the merge term, ``P[perm]`` realizes a coordinate permutation
    given in one-line form (``s(a)_j = a_{perm[j]}``, 1-based).
    """

    L: Mapping[str, Mapping[int, Term]] = field(default_factory=dict)
    M: Term | None = None
    P: Mapping[tuple[int, ...], Term] = field(default_factory=dict)
    defs: Mapping[str, tuple[int, str]] = field(default_factory=dict)
    # witness text as written (before defs are inlined), keyed by witness_key
    source: Mapping[str, str] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not (self.L or self.M is not None or self.P)

    def text(self, key: str, term: Term) -> str:
        return self.source.get(key) or term_text(term)


def witness_key(kind: str, *parts) -> str:
    """``L/join/1``, ``M``, ``P/2,1``."""
    return "/".join([kind, *(",".join(map(str, p)) if isinstance(p, tuple) else str(p)
                             for p in parts)])


@dataclass(frozen=True, eq=False)
class Duplicator:
    name: str
    base_sig: Signature
    m: int
    entries: tuple[DuplicatorEntry, ...]
    mode: str = LINKED
    witnesses: Witnesses = field(default_factory=Witnesses)
    provenance: str = ""

    @property
    def gamma_sig(self) -> Signature:
        return Signature.of(*[(e.name, e.arity) for e in self.entries])

    def entry(self, name: str) -> DuplicatorEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def extend(self, name: str, entries, witnesses: Witnesses | None = None) -> "Duplicator":
        return Duplicator(name, self.base_sig, self.m, self.entries + tuple(entries),
                          self.mode, witnesses or self.witnesses, self.provenance)

    def to_json(self) -> dict:
        w = self.witnesses
        wj: dict = {}
        if w.defs:
            wj["defs"] = {k: {"arity": a, "term": t} for k, (a, t) in w.defs.items()}
        if w.L:
            wj["L"] = {s: {str(i): w.text(witness_key("L", s, i), t) for i, t in sorted(c.items())}
                       for s, c in w.L.items()}
        if w.M is not None:
            wj["M"] = w.text("M", w.M)
        if w.P:
            wj["P"] = {",".join(map(str, p)): w.text(witness_key("P", p), t) for p, t in w.P.items()}
        out = {"name": self.name, "base_signature": self.base_sig.to_json(), "m": self.m,
               "mode": self.mode, "entries": [e.to_json() for e in self.entries]}
        if wj:
            out["witnesses"] = wj
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


# --- JSON -------------------------------------------------------------------

def _inline_defs(t: Term, defs: Mapping[str, tuple[int, Term]]) -> Term:
    def node(a, kids):
        if a.symbol in defs:
            arity, body = defs[a.symbol]
            if arity != len(kids):
                raise TermError(f"derived operation {a.symbol} takes {arity} arguments")
            return substitute(body, kids)
        return App(a.symbol, tuple(kids))

    return fold(t, lambda v: v, node)


def parse_gamma_term(text: str, gamma: Duplicator | Signature, defs=None) -> Term:
    """Parse a term of the Gamma-language, inlining derived operations."""
    sig = gamma.gamma_sig if isinstance(gamma, Duplicator) else gamma
    defs = defs or {}
    ext = Signature(sig.symbols + tuple((k, a) for k, (a, _) in defs.items()))
    return _inline_defs(parse_term(text, ext), defs)


def _parse_perm(key: str, m: int) -> tuple[int, ...]:
    try:
        p = tuple(int(s) for s in key.replace(" ", ",").split(",") if s)
    except ValueError:
        raise DuplicatorError(f"malformed permutation {key!r}") from None
    if sorted(p) != list(range(1, m + 1)):
        raise DuplicatorError(f"{key!r} is not a permutation of 1..{m}")
    return p


def duplicator_from_json(data: Mapping) -> Duplicator:
    try:
        sig = Signature.from_json(data["base_signature"])
        m = int(data["m"])
        mode = data.get("mode", LINKED)
        entries = []
        for e in data["entries"]:
            terms = tuple(parse_term(t, sig) for t in e["terms"])
            entries.append(DuplicatorEntry(e["name"], int(e["arity"]), terms))
    except KeyError as exc:
        raise DuplicatorError(f"duplicator file missing field {exc}") from None
    if mode not in (LINKED, DISJOINT):
        raise DuplicatorError(f"unknown mode {mode!r}")
    g = Duplicator(data.get("name", "Gamma"), sig, m, tuple(entries), mode,
                   provenance=data.get("provenance", ""))
    wj = data.get("witnesses") or {}
    gsig = g.gamma_sig
    defs: dict[str, tuple[int, Term]] = {}
    raw_defs = {}
    for k, d in (wj.get("defs") or {}).items():
        defs[k] = (int(d["arity"]), parse_gamma_term(d["term"], gsig, defs))
        raw_defs[k] = (int(d["arity"]), d["term"])
    source: dict[str, str] = {}
    L: dict[str, dict[int, Term]] = {}
    for s, c in (wj.get("L") or {}).items():
        L[s] = {}
        for i, t in c.items():
            L[s][int(i)] = parse_gamma_term(t, gsig, defs)
            source[witness_key("L", s, int(i))] = t
    M = None
    if wj.get("M"):
        M = parse_gamma_term(wj["M"], gsig, defs)
        source["M"] = wj["M"]
    P = {}
    for k, t in (wj.get("P") or {}).items():
        perm = _parse_perm(k, m)
        P[perm] = parse_gamma_term(t, gsig, defs)
        source[witness_key("P", perm)] = t
    return Duplicator(g.name, sig, m, g.entries, mode, Witnesses(L, M, P, raw_defs, source),
                      g.provenance)


def load_duplicator(path) -> Duplicator:
    with open(path, encoding="utf-8") as fh:
        return duplicator_from_json(load_json_text(fh.read(), str(path)))


# --- validation and the (D) test ---------------------------------------------

def coordinate_of_variable(index: int, m: int) -> tuple[int, int]:
    """(Gamma-argument, coordinate), both 1-based, of base variable ``index``."""
    return (index - 1) // m + 1, (index - 1) % m + 1


def disjointness_violations(g: Duplicator) -> list[str]:
    out = []
    for e in g.entries:
        for j, t in enumerate(e.terms, start=1):
            bad = sorted(v for v in variables(t) if coordinate_of_variable(v, g.m)[1] != j)
            if bad:
                out.append(f"{e.name}: coordinate {j} term {render_term(t)} reads "
                           + ", ".join(f"x{v}" for v in bad))
    return out


def validate_duplicator(g: Duplicator) -> list[str]:
    """Structural problems with ``g``; the empty list means valid."""
    out = []
    if g.m < 1:
        out.append(f"factor count must be positive, got {g.m}")
    seen = set()
    for e in g.entries:
        if e.name in seen:
            out.append(f"duplicate entry name {e.name}")
        seen.add(e.name)
        if e.arity < 0:
            out.append(f"{e.name}: negative arity")
        if len(e.terms) != g.m:
            out.append(f"{e.name}: {len(e.terms)} terms for {g.m} factors")
        for j, t in enumerate(e.terms, start=1):
            try:
                check_term(t, g.base_sig)
            except TermError as exc:
                out.append(f"{e.name}: coordinate {j}: {exc}")
            span = free_variable_span(t)
            if span > g.m * e.arity:
                out.append(f"{e.name}: coordinate {j} term has span {span} > "
                           f"{g.m}*{e.arity}")
    if g.mode == DISJOINT:
        out.extend(disjointness_violations(g))
    w = g.witnesses
    gsig = g.gamma_sig
    named = [("M", w.M)] + [(f"P{p}", t) for p, t in w.P.items()]
    named += [(f"L[{s}][{i}]", t) for s, c in w.L.items() for i, t in c.items()]
    for label, t in named:
        if t is None:
            continue
        try:
            check_term(t, gsig)
        except TermError as exc:
            out.append(f"witness {label}: {exc}")
    for s, c in w.L.items():
        if s not in g.base_sig:
            out.append(f"witness L names unknown base symbol {s}")
        for i in c:
            if not 1 <= i <= g.m:
                out.append(f"witness L[{s}] coordinate {i} out of range")
    return out


# --- expansion into base terms -------------------------------------------------

def expand(g: Duplicator, t: Term) -> tuple[Term, ...]:
    """Coordinate base terms of the Gamma-term ``t`` in the block layout."""
    m = g.m
    entries = {e.name: e for e in g.entries}

    def node(a, kids):
        args = [kids[i][j] for i in range(len(kids)) for j in range(m)]
        return tuple(substitute(term, args) for term in entries[a.symbol].terms)

    return fold(t, lambda v: tuple(Var(m * (v.index - 1) + j) for j in range(1, m + 1)), node)


# --- encoding of N^m ------------------------------------------------------------

def encode(coords: Sequence[np.ndarray], n: int) -> np.ndarray:
    out = np.zeros(np.shape(coords[0]), dtype=INDEX)
    for c in coords:
        out = out * n + np.asarray(c, dtype=INDEX)
    return out


def decode(codes: np.ndarray, n: int, m: int) -> list[np.ndarray]:
    codes = np.asarray(codes, dtype=INDEX)
    out = []
    for _ in range(m):
        out.append(codes % n)
        codes = codes // n
    return out[::-1]


def _pair_label(alg: FiniteAlgebra, coords) -> str:
    return "(" + ",".join(alg.label(int(c)) for c in coords) + ")"


# --- constructions -------------------------------------------------------------

def _require_base(g: Duplicator, alg: FiniteAlgebra) -> None:
    if alg.sig != g.base_sig:
        raise DuplicatorError(
            f"{alg.name} has signature {alg.sig.names}, {g.name} expects {g.base_sig.names}")


def duplicate(g: Duplicator, N: FiniteAlgebra, name: str | None = None) -> FiniteAlgebra:
    """P_Gamma(N) on N^m, elements in lexicographic order."""
    _require_base(g, N)
    n, m = N.size, g.m
    size = n ** m
    tables = {}
    for e in g.entries:
        args = all_tuples(size, e.arity)
        base_cols: list[np.ndarray] = []
        for i in range(e.arity):
            base_cols.extend(decode(args[:, i], n, m))
        rows = args.shape[0]
        vals = []
        for t in e.terms:
            v = eval_vec(t, N, base_cols)
            vals.append(np.broadcast_to(np.asarray(v, dtype=INDEX), (rows,)))
        tables[e.name] = encode(vals, n)
    coords = decode(np.arange(size), n, m)
    labels = tuple(_pair_label(N, [c[k] for c in coords]) for k in range(size))
    return FiniteAlgebra(name or f"P[{g.name}]({N.name})", g.gamma_sig, size, tables, labels)


def duplicate_mixed(g: Duplicator, factors: Sequence[FiniteAlgebra],
                    name: str | None = None) -> FiniteAlgebra:
    """A_1 (.)_Gamma ... (.)_Gamma A_m; coordinate j is computed in factor j alone."""
    if g.mode != DISJOINT:
        raise DuplicatorError(f"{g.name} is not in disjoint mode")
    bad = disjointness_violations(g)
    if bad:
        raise DuplicatorError("; ".join(bad))
    if len(factors) != g.m:
        raise DuplicatorError(f"{g.name} needs {g.m} factors, got {len(factors)}")
    for f in factors:
        _require_base(g, f)
    sizes = [f.size for f in factors]
    size = int(np.prod(sizes))
    coords_of = _mixed_decode(np.arange(size), sizes)
    tables = {}
    for e in g.entries:
        args = all_tuples(size, e.arity)
        per_arg = [_mixed_decode(args[:, i], sizes) for i in range(e.arity)]
        vals = []
        for j, t in enumerate(e.terms):
            cols = {g.m * i + j + 1: per_arg[i][j] for i in range(e.arity)}
            v = eval_vec(t, factors[j], cols)
            vals.append(np.broadcast_to(np.asarray(v, dtype=INDEX), (args.shape[0],)))
        tables[e.name] = _mixed_encode(vals, sizes)
    labels = tuple("(" + ",".join(factors[j].label(int(coords_of[j][k])) for j in range(g.m)) + ")"
                   for k in range(size))
    nm = name or f"{'.'.join(f.name for f in factors)}[{g.name}]"
    return FiniteAlgebra(nm, g.gamma_sig, size, tables, labels)


def _mixed_decode(codes, sizes):
    codes = np.asarray(codes, dtype=INDEX)
    out = []
    for s in reversed(sizes):
        out.append(codes % s)
        codes = codes // s
    return out[::-1]


def _mixed_encode(cols, sizes):
    out = np.zeros(np.shape(cols[0]), dtype=INDEX)
    for c, s in zip(cols, sizes):
        out = out * s + np.asarray(c, dtype=INDEX)
    return out


def lift_morphism(g: Duplicator, h: Homomorphism, PA: FiniteAlgebra | None = None,
                  PB: FiniteAlgebra | None = None) -> Homomorphism:
    """The map h^m between duplicated algebras, validated."""
    if not h.is_valid():
        raise AlgebraError("lift_morphism needs a homomorphism")
    PA = PA or duplicate(g, h.source)
    PB = PB or duplicate(g, h.target)
    hm = np.asarray(h.map, dtype=INDEX)
    coords = decode(np.arange(PA.size), h.source.size, g.m)
    image = encode([hm[c] for c in coords], h.target.size)
    lifted = Homomorphism(PA, PB, tuple(int(x) for x in image))
    if not lifted.is_valid():
        raise AssertionError(f"lift of {h} under {g.name} is not a homomorphism")
    return lifted


# --- permutations ------------------------------------------------------------------

def compose_perms(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Permutation realized by ``s_p(s_q(x))``: coordinate j reads ``q[p[j]]``."""
    return tuple(q[p[j] - 1] for j in range(len(p)))


def symmetric_group_generators(m: int) -> list[tuple[int, ...]]:
    if m < 2:
        return []
    swap = (2, 1) + tuple(range(3, m + 1))
    if m == 2:
        return [swap]
    cycle = tuple(range(2, m + 1)) + (1,)
    return [swap, cycle]


@lru_cache(maxsize=None)
def all_perms(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(1, m + 1)))


def generate_permutation_terms(gens: Mapping[tuple[int, ...], Term], m: int):
    """Close witness terms for ``gens`` under composition; shortest word first."""
    ident = tuple(range(1, m + 1))
    found: dict[tuple[int, ...], Term] = {ident: Var(1)}
    frontier = [ident]
    order = sorted(gens)
    while frontier:
        nxt = []
        for p in frontier:
            for q in order:
                r = compose_perms(q, p)
                if r not in found:
                    found[r] = substitute(gens[q], [found[p]])
                    nxt.append(r)
        frontier = nxt
    return found
