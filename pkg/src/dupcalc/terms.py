"""Signatures, first-order terms, their text syntax and evaluation.

Two text forms are accepted wherever a term is expected::

    (join x1 (meet x2 x3))      prefix form, variables are x1, x2, ...
    join/4[1,3]                 indexed shorthand: join(x1, x3) in a 4-variable context

Variables are 1-based in all text and in :class:`Var`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np


class TermError(ValueError):
    """Raised for malformed term text or ill-formed terms."""

    def __init__(self, message: str, column: int | None = None):
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
        self.column = column


@dataclass(frozen=True)
class Signature:
    """Ordered operation symbols with arities."""

    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate symbols in signature: {names}")
        for name, arity in self.symbols:
            if arity < 0:
                raise ValueError(f"negative arity for {name}")

    @classmethod
    def of(cls, *pairs: tuple[str, int]) -> "Signature":
        return cls(tuple((str(n), int(a)) for n, a in pairs))

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.symbols]

    def arity(self, name: str) -> int:
        for sym, ar in self.symbols:
            if sym == name:
                return ar
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(sym == name for sym, _ in self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def restrict(self, names: Iterable[str]) -> "Signature":
        keep = set(names)
        return Signature(tuple(s for s in self.symbols if s[0] in keep))

    def to_json(self) -> list[dict]:
        return [{"symbol": n, "arity": a} for n, a in self.symbols]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "Signature":
        return cls(tuple((d["symbol"], int(d["arity"])) for d in data))


class Term:
    """Base class of :class:`Var` and :class:`App`."""

    __slots__ = ()

    def __str__(self):
        return render_term(self)


@dataclass(frozen=True, repr=False)
class Var(Term):
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise TermError(f"variable index must be >= 1, got {self.index}")

    def __repr__(self):
        return f"x{self.index}"


@dataclass(frozen=True, repr=False)
class App(Term):
    symbol: str
    children: tuple[Term, ...] = ()

    def __repr__(self):
        return render_term(self)

    def __hash__(self):
        # terms built by substitution get deep; cache the structural hash
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.symbol, self.children))
            object.__setattr__(self, "_hash", h)
        return h


def render_term(t: Term) -> str:
    if isinstance(t, Var):
        return f"x{t.index}"
    if not t.children:
        return t.symbol
    return "(" + " ".join([t.symbol] + [render_term(c) for c in t.children]) + ")"


def fold(t: Term, leaf, node):
    """Bottom-up fold over the term DAG; shared subterms are visited once.

    ``leaf(var)`` handles variables, ``node(app, child_results)`` applications.
    Terms built by repeated substitution share structure heavily, so a plain
    tree walk can be exponential in their printed size.
    """
    memo: dict[int, object] = {}
    keep = []

    def go(s: Term):
        key = id(s)
        if key in memo:
            return memo[key]
        out = leaf(s) if isinstance(s, Var) else node(s, [go(c) for c in s.children])
        memo[key] = out
        keep.append(s)
        return out

    return go(t)


def tree_size(t: Term) -> int:
    """Node count of ``t`` written out as a tree (shared subterms counted each time)."""
    return fold(t, lambda v: 1, lambda a, cs: 1 + sum(cs))


def term_text(t: Term, limit: int = 4000) -> str:
    """``render_term`` unless the printed tree would exceed ``limit`` nodes."""
    n = tree_size(t)
    if n <= limit:
        return render_term(t)
    return f"<term with {n} nodes, depth {depth(t)}>"


def free_variable_span(t: Term) -> int:
    """Largest variable index occurring in ``t`` (0 for closed terms)."""
    return fold(t, lambda v: v.index, lambda a, cs: max(cs, default=0))


def variables(t: Term) -> set[int]:
    return set(fold(t, lambda v: frozenset((v.index,)),
                    lambda a, cs: frozenset().union(*cs)))


def symbols(t: Term) -> set[str]:
    return set(fold(t, lambda v: frozenset(),
                    lambda a, cs: frozenset((a.symbol,)).union(*cs)))


def depth(t: Term) -> int:
    return fold(t, lambda v: 0, lambda a, cs: 1 + max(cs, default=0))


def check_term(t: Term, sig: Signature) -> None:
    """Raise :class:`TermError` unless every application matches ``sig``."""
    def node(a, _):
        if a.symbol not in sig:
            raise TermError(f"unknown symbol {a.symbol!r}")
        if sig.arity(a.symbol) != len(a.children):
            raise TermError(
                f"arity mismatch: {a.symbol} takes {sig.arity(a.symbol)} arguments, "
                f"got {len(a.children)}")

    fold(t, lambda v: None, node)


def indexed_term(symbol: str, width: int, indices: Sequence[int],
                 sig: Signature | None = None) -> App:
    """The term ``symbol(x_{i1}, ..., x_{in})`` in a ``width``-variable context."""
    if width < 1:
        raise TermError("width must be positive")
    for i in indices:
        if not 1 <= i <= width:
            raise TermError(f"index {i} out of range 1..{width}")
    if sig is not None:
        if symbol not in sig:
            raise TermError(f"unknown symbol {symbol!r}")
        if sig.arity(symbol) != len(indices):
            raise TermError(
                f"arity mismatch: {symbol} takes {sig.arity(symbol)} arguments, "
                f"got {len(indices)}")
    return App(symbol, tuple(Var(i) for i in indices))


def projection_term(width: int, i: int) -> Var:
    if not 1 <= i <= width:
        raise TermError(f"projection index {i} out of range 1..{width}")
    return Var(i)


def substitute(t: Term, args: Sequence[Term]) -> Term:
    """Replace ``x_i`` by ``args[i-1]``."""
    def leaf(v):
        if v.index > len(args):
            raise TermError(f"no substitute for x{v.index}")
        return args[v.index - 1]

    return fold(t, leaf, lambda a, cs: a if not cs else App(a.symbol, tuple(cs)))


# --- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<short>[A-Za-z_][A-Za-z0-9_']*/\d+\[[^\]]*\])
  | (?P<var>x\d+(?![A-Za-z_'\d]))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE)

_SHORT = re.compile(r"([A-Za-z_][A-Za-z0-9_']*)/(\d+)\[([^\]]*)\]")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise TermError(f"unexpected character {text[pos]!r}", pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos + 1))
        pos = m.end()
    return out


def _parse_short(tok: str, col: int, sig: Signature | None) -> App:
    m = _SHORT.fullmatch(tok)
    name, width, body = m.group(1), int(m.group(2)), m.group(3).strip()
    try:
        indices = [int(s) for s in body.split(",")] if body else []
    except ValueError:
        raise TermError(f"malformed index list in {tok!r}", col) from None
    try:
        return indexed_term(name, width, indices, sig)
    except TermError as exc:
        raise TermError(str(exc), col) from None


def parse_term(text: str, sig: Signature | None = None) -> Term:
    """Parse prefix or indexed-shorthand term text.

    With ``sig`` given, symbols and arities are checked; bare identifiers are
    then only accepted for constants.
    """
    toks = _tokenize(text)
    if not toks:
        raise TermError("empty term")
    pos = 0

    def expr():
        nonlocal pos
        if pos >= len(toks):
            raise TermError("unexpected end of term", len(text) + 1)
        kind, tok, col = toks[pos]
        pos += 1
        if kind == "var":
            return Var(int(tok[1:]))
        if kind == "short":
            return _parse_short(tok, col, sig)
        if kind == "ident":
            if sig is not None:
                if tok not in sig:
                    raise TermError(f"unknown symbol {tok!r}", col)
                if sig.arity(tok) != 0:
                    raise TermError(
                        f"arity mismatch: {tok} takes {sig.arity(tok)} arguments, got 0", col)
            return App(tok)
        if kind == "lp":
            if pos >= len(toks) or toks[pos][0] != "ident":
                raise TermError("expected operation symbol after '('", col)
            _, name, ncol = toks[pos]
            pos += 1
            children = []
            while pos < len(toks) and toks[pos][0] != "rp":
                children.append(expr())
            if pos >= len(toks):
                raise TermError("unbalanced '('", col)
            pos += 1
            if sig is not None:
                if name not in sig:
                    raise TermError(f"unknown symbol {name!r}", ncol)
                if sig.arity(name) != len(children):
                    raise TermError(
                        f"arity mismatch: {name} takes {sig.arity(name)} arguments, "
                        f"got {len(children)}", ncol)
            return App(name, tuple(children))
        raise TermError(f"unexpected {tok!r}", col)

    t = expr()
    if pos != len(toks):
        raise TermError(f"trailing input {toks[pos][1]!r}", toks[pos][2])
    return t


# --- evaluation --------------------------------------------------------------

def eval_term(t: Term, alg, assignment: Sequence[int]) -> int:
    """Value of ``t`` in ``alg`` with ``x_i`` bound to ``assignment[i-1]``."""
    span = free_variable_span(t)
    if len(assignment) < span:
        raise TermError(f"assignment of length {len(assignment)} too short for span {span}")

    return fold(t, lambda v: int(assignment[v.index - 1]),
                lambda a, cs: alg.apply(a.symbol, cs))


def eval_vec(t: Term, alg, columns: Mapping[int, np.ndarray] | Sequence[np.ndarray]):
    """Evaluate ``t`` on whole arrays of assignments at once.

    ``columns[i-1]`` (or ``columns[i]`` for a mapping) holds the values of
    ``x_i``; all arrays share one shape. Closed subterms broadcast.
    """
    if isinstance(columns, Mapping):
        get = columns.__getitem__
    else:
        def get(i):
            return columns[i - 1]
    return fold(t, lambda v: np.asarray(get(v.index)),
                lambda a, cs: alg.apply_vec(a.symbol, cs))
