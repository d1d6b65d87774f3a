"""Desk-scale checks that P_Gamma behaves like a categorical equivalence.

Three clauses, each exhaustive on small algebras:

* fullness: every homomorphism P(A) -> P(B) is h^m for a homomorphism h: A -> B;
* density: every subuniverse of P(A) is S^m for a subuniverse S of A;
* congruences: theta -> theta^m is an order isomorphism Con(A) -> Con(P(A)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .algebra import FiniteAlgebra, all_subuniverses
from .congruence import Congruence, congruence_lattice
from .duplicator import Duplicator, duplicate, lift_morphism
from .homs import enumerate_homomorphisms

SMOKE_SIZE_LIMIT = 3


@dataclass
class Clause:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"clause": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class SmokeReport:
    duplicator: str
    source: str
    target: str
    clauses: list[Clause] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def to_json(self) -> dict:
        return {"duplicator": self.duplicator, "source": self.source, "target": self.target,
                "ok": self.ok, "clauses": [c.to_json() for c in self.clauses]}


def power_tuple(subset, n: int, m: int) -> tuple[int, ...]:
    """Element indices of S^m inside N^m (lexicographic, first coordinate most significant)."""
    out = []
    for coords in iproduct(sorted(subset), repeat=m):
        x = 0
        for c in coords:
            x = x * n + c
        out.append(x)
    return tuple(sorted(out))


def power_congruence(theta: Congruence, m: int) -> Congruence:
    """theta^m: tuples related iff related coordinatewise."""
    n = theta.size
    reps = []
    for coords in iproduct(range(n), repeat=m):
        x = 0
        for c in coords:
            x = x * n + theta.rep[c]
        reps.append(x)
    return Congruence.from_array(reps)


def fullness(g: Duplicator, A: FiniteAlgebra, B: FiniteAlgebra, PA=None, PB=None) -> Clause:
    PA = PA or duplicate(g, A)
    PB = PB or duplicate(g, B)
    base = enumerate_homomorphisms(A, B).homs
    lifted = {lift_morphism(g, h, PA, PB).map: h.map for h in base}
    dup = enumerate_homomorphisms(PA, PB).homs
    stray = [h.map for h in dup if h.map not in lifted]
    detail = {"base_homs": len(base), "duplicated_homs": len(dup)}
    if stray:
        detail["not_product_form"] = list(stray[0])
    if len(lifted) != len(base):
        detail["lift_not_injective"] = True
    ok = not stray and len(dup) == len(base) == len(lifted)
    return Clause("fullness", ok, detail)


def density(g: Duplicator, A: FiniteAlgebra, PA=None) -> Clause:
    PA = PA or duplicate(g, A)
    subs_a = all_subuniverses(A)
    expected = {power_tuple(s, A.size, g.m) for s in subs_a}
    got = set(all_subuniverses(PA))
    detail = {"base_subuniverses": len(subs_a), "duplicated_subuniverses": len(got)}
    extra = sorted(got - expected)
    missing = sorted(expected - got)
    if extra:
        detail["not_a_power"] = list(extra[0])
    if missing:
        detail["power_not_closed"] = list(missing[0])
    return Clause("density", not extra and not missing, detail)


def congruence_transfer(g: Duplicator, A: FiniteAlgebra, PA=None) -> Clause:
    PA = PA or duplicate(g, A)
    con_a = congruence_lattice(A)
    con_p = congruence_lattice(PA)
    image = [power_congruence(t, g.m) for t in con_a.congruences]
    detail = {"con_base": len(con_a), "con_duplicate": len(con_p)}
    found = set(con_p.congruences)
    stray = [str(c) for c in image if c not in found]
    if stray:
        detail["power_not_congruence"] = stray[0]
    bijective = len(set(image)) == len(con_a) == len(con_p) and not stray
    order_ok = bijective and all(
        (x <= y) == (image[i] <= image[j])
        for i, x in enumerate(con_a.congruences) for j, y in enumerate(con_a.congruences))
    if bijective and not order_ok:
        detail["order_mismatch"] = True
    return Clause("congruences", bijective and order_ok, detail)


def equivalence_smoke_test(g: Duplicator, A: FiniteAlgebra, B: FiniteAlgebra | None = None,
                           size_limit: int = SMOKE_SIZE_LIMIT) -> SmokeReport:
    """Run fullness (A -> B), density and congruence transfer (on A)."""
    B = A if B is None else B
    rep = SmokeReport(g.name, A.name, B.name)
    if max(A.size, B.size) > size_limit:
        rep.clauses.append(Clause("size", False, {
            "reason": f"smoke tests are exhaustive; sizes must be <= {size_limit}"}))
        return rep
    PA = duplicate(g, A)
    PB = PA if B is A else duplicate(g, B)
    rep.clauses.append(fullness(g, A, B, PA, PB))
    rep.clauses.append(density(g, A, PA))
    rep.clauses.append(congruence_transfer(g, A, PA))
    return rep
