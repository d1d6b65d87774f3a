"""Catalog of named algebras, duplicators and axiom suites.

Algebras and duplicators are shipped as JSON under ``data/``; the Python
definitions in :mod:`.algebras` and :mod:`.duplicators` generate those files
and remain the reference (a test checks the two agree). Algebras too large
to ship (256) are built on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any

from ..algebra import FiniteAlgebra, load_json_text
from ..axioms import Obligation
from ..duplicator import Duplicator, duplicator_from_json, validate_duplicator
from .algebras import ALGEBRAS, ALIASES
from .duplicators import DUPLICATORS
from .suites import SUITES

ALGEBRA, DUPLICATOR, SUITE = "algebra", "duplicator", "axiom-suite"
KINDS = (ALGEBRA, DUPLICATOR, SUITE)
SHIP_LIMIT = 64


class CatalogError(KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "catalog error"


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    kind: str
    provenance: str
    payload: Any = None


def _data_text(*parts: str) -> str | None:
    res = resources.files(__package__).joinpath("data", *parts)
    return res.read_text(encoding="utf-8") if res.is_file() else None


def canonical_key(key: str) -> str:
    return ALIASES.get(key, key)


@lru_cache(maxsize=None)
def catalog_algebra(key: str) -> FiniteAlgebra:
    key = canonical_key(key)
    if key not in ALGEBRAS:
        raise CatalogError(f"unknown catalog algebra {key!r}")
    text = _data_text("algebras", f"{key}.json")
    if text is not None:
        return FiniteAlgebra.from_json(load_json_text(text, f"catalog:{key}"))
    return build_algebra(key)


def build_algebra(key: str) -> FiniteAlgebra:
    """Run the Python builder (bypassing shipped data)."""
    return ALGEBRAS[canonical_key(key)].build()


@lru_cache(maxsize=None)
def catalog_duplicator(key: str) -> Duplicator:
    if key not in DUPLICATORS:
        raise CatalogError(f"unknown catalog duplicator {key!r}")
    text = _data_text("duplicators", f"{key}.json")
    data = load_json_text(text, f"catalog:{key}") if text is not None else DUPLICATORS[key]
    return duplicator_from_json(data)


def catalog_axiom_suite(key: str) -> list[Obligation]:
    if key not in SUITES:
        raise CatalogError(f"unknown axiom suite {key!r}")
    return SUITES[key][0]()


def intended_suite(key: str) -> str | None:
    return ALGEBRAS[canonical_key(key)].suite


def catalog_list(kind: str | None = None) -> list[CatalogEntry]:
    """Keys with provenance, algebras first, each kind in definition order."""
    if kind not in (None, "", *KINDS):
        raise CatalogError(f"unknown catalog kind {kind!r}")
    out = []
    if kind in (None, "", ALGEBRA):
        out += [CatalogEntry(k, ALGEBRA, s.provenance) for k, s in ALGEBRAS.items()]
    if kind in (None, "", DUPLICATOR):
        out += [CatalogEntry(k, DUPLICATOR, d.get("provenance", "")) for k, d in DUPLICATORS.items()]
    if kind in (None, "", SUITE):
        out += [CatalogEntry(k, SUITE, desc) for k, (_, desc) in SUITES.items()]
    return out


def catalog_entry(key: str) -> CatalogEntry:
    k = canonical_key(key)
    if k in ALGEBRAS:
        return CatalogEntry(k, ALGEBRA, ALGEBRAS[k].provenance, catalog_algebra(k))
    if k in DUPLICATORS:
        g = catalog_duplicator(k)
        return CatalogEntry(k, DUPLICATOR, g.provenance, g)
    if k in SUITES:
        return CatalogEntry(k, SUITE, SUITES[k][1], catalog_axiom_suite(k))
    raise CatalogError(f"unknown catalog key {key!r}")


def shipped_algebra_keys() -> list[str]:
    return [k for k in ALGEBRAS if k != "256"]


def check_catalog_duplicators() -> dict[str, list[str]]:
    """Validation problems per duplicator key (empty lists when clean)."""
    return {k: validate_duplicator(catalog_duplicator(k)) for k in DUPLICATORS}


__all__ = [
    "ALGEBRA", "DUPLICATOR", "SUITE", "CatalogEntry", "CatalogError", "build_algebra",
    "catalog_algebra", "catalog_axiom_suite", "catalog_duplicator", "catalog_entry",
    "catalog_list", "intended_suite", "shipped_algebra_keys",
]
