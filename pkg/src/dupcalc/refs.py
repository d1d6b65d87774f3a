"""Algebra and duplicator references used by the CLI and the verify suite.

An algebra reference is one of

* ``catalog:KEY`` or a bare catalog key,
* a path to an algebra JSON file,
* ``P(GAMMA;REF)``            duplicate,
* ``Mixed(GAMMA;REF,...,REF)`` mixed product (disjoint-mode GAMMA),
* ``F(REF,...;K)``            K-generated free algebra of the variety they generate,
* ``Prod(REF,...)``           direct product,
* ``Sub(REF;I,...)``          subalgebra generated by element indices,
* ``Reduct(REF;SYM,...)``     reduct to the listed symbols.

GAMMA is a duplicator key, ``catalog:KEY``, a file path, or ``G1+G2`` (the
entries of G1 followed by the new entries of G2).
"""

from __future__ import annotations

import os
from functools import lru_cache

from .algebra import FiniteAlgebra, InputError, direct_product, load_algebra, subalgebra, subalgebra_generated
from .catalog import CatalogError, canonical_key, catalog_algebra, catalog_duplicator
from .duplicator import Duplicator, DuplicatorError, duplicate, duplicate_mixed, load_duplicator

_FORMS = ("P", "Mixed", "F", "Prod", "Sub", "Reduct")


class RefError(InputError):
    pass


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise RefError(f"unbalanced parentheses in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise RefError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur).strip())
    return parts


def _form(ref: str):
    head, paren, rest = ref.partition("(")
    if paren and head in _FORMS and ref.endswith(")"):
        return head, rest[:-1]
    return None


def resolve_duplicator(ref: str) -> Duplicator:
    ref = ref.strip()
    if "+" in ref and not os.path.exists(ref):
        parts = [resolve_duplicator(p) for p in ref.split("+")]
        return union(parts)
    if ref.startswith("catalog:"):
        return _catalog_dup(ref[len("catalog:"):])
    if os.path.exists(ref):
        try:
            return load_duplicator(ref)
        except DuplicatorError as exc:
            raise RefError(f"{ref}: {exc}") from None
    return _catalog_dup(ref)


def _catalog_dup(key: str) -> Duplicator:
    try:
        return catalog_duplicator(key)
    except CatalogError as exc:
        raise RefError(str(exc)) from None


def union(parts: list[Duplicator]) -> Duplicator:
    first = parts[0]
    entries = list(first.entries)
    names = {e.name: e for e in entries}
    for g in parts[1:]:
        if g.base_sig != first.base_sig or g.m != first.m:
            raise RefError(f"cannot combine {first.name} and {g.name}: different base or m")
        for e in g.entries:
            if e.name in names:
                if names[e.name].terms != e.terms or names[e.name].arity != e.arity:
                    raise RefError(f"entry {e.name} differs between {first.name} and {g.name}")
                continue
            names[e.name] = e
            entries.append(e)
    name = "+".join(g.name for g in parts)
    return Duplicator(name, first.base_sig, first.m, tuple(entries), first.mode,
                      provenance="union of " + ", ".join(g.name for g in parts))


def resolve_algebra(ref: str) -> FiniteAlgebra:
    return _resolve(ref.strip())


@lru_cache(maxsize=256)
def _resolve(ref: str) -> FiniteAlgebra:
    form = _form(ref)
    if form is None:
        if ref.startswith("catalog:"):
            return _catalog_alg(ref[len("catalog:"):])
        if os.path.exists(ref):
            return load_algebra(ref)
        return _catalog_alg(ref)
    head, body = form
    try:
        if head == "P":
            g, a = _split_top(body, ";")
            return duplicate(resolve_duplicator(g), _resolve(a))
        if head == "Mixed":
            g, rest = _split_top(body, ";")
            return duplicate_mixed(resolve_duplicator(g), [_resolve(x) for x in _split_top(rest, ",")])
        if head == "F":
            from .free import free_algebra
            cls, k = _split_top(body, ";")
            return free_algebra([_resolve(x) for x in _split_top(cls, ",")], int(k)).algebra
        if head == "Prod":
            return direct_product([_resolve(x) for x in _split_top(body, ",")])
        if head == "Sub":
            a, seeds = _split_top(body, ";")
            A = _resolve(a)
            elems = subalgebra_generated(A, [int(s) for s in _split_top(seeds, ",") if s])
            return subalgebra(A, elems, name=ref)[0]
        if head == "Reduct":
            a, syms = _split_top(body, ";")
            return _resolve(a).reduct([s for s in _split_top(syms, ",") if s])
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise RefError(f"{ref}: {exc}") from None
    raise RefError(f"cannot resolve {ref!r}")


def _catalog_alg(key: str) -> FiniteAlgebra:
    try:
        return catalog_algebra(canonical_key(key))
    except CatalogError as exc:
        raise RefError(str(exc)) from None
