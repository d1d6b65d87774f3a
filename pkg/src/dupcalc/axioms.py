"""Axiom obligations and their exhaustive checking on finite algebras.

An obligation is an identity, a monotonicity requirement with respect to
an order induced by a meet symbol, or an adjointness requirement between a
binary operation and a candidate residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import AlgebraError, FiniteAlgebra, ResourceError
from .properties import (DEFAULT_EVAL_CAP, Verdict, check_adjointness, check_identity,
                         check_monotonicity, induced_order)
from .terms import TermError

IDENTITY = "identity"
MONOTONE = "monotone"
ADJOINT = "adjoint"
COADJOINT = "coadjoint"
RADJOINT = "radjoint"


@dataclass(frozen=True)
class Obligation:
    """One checkable axiom.

    identity: ``lhs = rhs``.
    monotone: ``op`` is isotone w.r.t. the order of ``order`` (a meet symbol),
    antitone in the ``antitone`` positions (1-based).
    adjoint: ``op(a, b) <= c  iff  b <= imp(a, c)`` in the order of ``order``.
    coadjoint: ``c <= op(a, b)  iff  imp(a, c) <= b`` (join residual).
    radjoint: ``op(a, b) <= c  iff  a <= imp(c, b)`` (right residual).
    """

    id: str
    kind: str
    lhs: str = ""
    rhs: str = ""
    op: str = ""
    order: str = ""
    antitone: tuple[int, ...] = ()
    imp: str = ""

    def describe(self) -> str:
        if self.kind == IDENTITY:
            return f"{self.lhs} = {self.rhs}"
        if self.kind == MONOTONE:
            way = f" (antitone at {list(self.antitone)})" if self.antitone else ""
            return f"{self.op} monotone w.r.t. <={self.order}{way}"
        return f"{self.imp} {self.kind} to {self.op} w.r.t. <={self.order}"


@dataclass(frozen=True)
class ObligationResult:
    obligation: Obligation
    ok: bool
    witness: tuple | None = None
    error: str | None = None

    def to_json(self) -> dict:
        out = {"id": self.obligation.id, "ok": self.ok, "statement": self.obligation.describe()}
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        if self.error is not None:
            out["error"] = self.error
        return out


def _plain(x):
    if isinstance(x, (tuple, list)):
        return [_plain(v) for v in x]
    return int(x)


def identity(id: str, lhs: str, rhs: str) -> Obligation:
    return Obligation(id, IDENTITY, lhs=lhs, rhs=rhs)


def monotone(id: str, op: str, order: str, antitone=()) -> Obligation:
    return Obligation(id, MONOTONE, op=op, order=order, antitone=tuple(antitone))


def adjoint(id: str, op: str, imp: str, order: str) -> Obligation:
    return Obligation(id, ADJOINT, op=op, imp=imp, order=order)


def coadjoint(id: str, op: str, imp: str, order: str) -> Obligation:
    return Obligation(id, COADJOINT, op=op, imp=imp, order=order)


def radjoint(id: str, op: str, imp: str, order: str) -> Obligation:
    return Obligation(id, RADJOINT, op=op, imp=imp, order=order)


def _radjoint(alg: FiniteAlgebra, order: str, op: str, imp: str) -> Verdict:
    leq = induced_order(alg, order)
    T = alg.cube(op)
    R = alg.cube(imp)
    n = alg.size
    for b in range(n):
        # lhs[a, c]: op(a, b) <= c; rhs[a, c]: a <= imp(c, b)
        lhs = leq[T[:, b][:, None], np.arange(n)[None, :]]
        rhs = leq[np.arange(n)[:, None], R[:, b][None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, c = bad[0]
            return Verdict(False, (int(a), b, int(c)))
    return Verdict(True)


def _coadjoint(alg: FiniteAlgebra, order: str, op: str, imp: str) -> Verdict:
    leq = induced_order(alg, order)
    T = alg.cube(op)
    I = alg.cube(imp)
    n = alg.size
    for a in range(n):
        # lhs[b, c]: c <= op(a, b); rhs[b, c]: imp(a, c) <= b
        lhs = leq[np.arange(n)[None, :], T[a][:, None]]
        rhs = leq[I[a][None, :], np.arange(n)[:, None]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return Verdict(False, (a, int(b), int(c)))
    return Verdict(True)


def check_obligation(alg: FiniteAlgebra, ob: Obligation, cap: int = DEFAULT_EVAL_CAP,
                     orders: dict | None = None) -> ObligationResult:
    orders = {} if orders is None else orders
    try:
        if ob.kind == IDENTITY:
            v = check_identity(alg, ob.lhs, ob.rhs, cap)
        elif ob.kind == MONOTONE:
            if ob.order not in orders:
                orders[ob.order] = induced_order(alg, ob.order)
            v = check_monotonicity(alg, ob.op, orders[ob.order], ob.antitone)
        elif ob.kind == ADJOINT:
            v = check_adjointness(alg, ob.order, alg.tables[ob.imp], ob.op)
        elif ob.kind == RADJOINT:
            v = _radjoint(alg, ob.order, ob.op, ob.imp)
        elif ob.kind == COADJOINT:
            v = _coadjoint(alg, ob.order, ob.op, ob.imp)
        else:
            raise ValueError(f"unknown obligation kind {ob.kind!r}")
    except (AlgebraError, TermError, KeyError) as exc:
        return ObligationResult(ob, False, error=f"{type(exc).__name__}: {exc}")
    except ResourceError as exc:
        return ObligationResult(ob, False, error=f"resource: {exc}")
    return ObligationResult(ob, v.ok, v.witness)


def run_suite(alg: FiniteAlgebra, obligations: Sequence[Obligation],
              cap: int = DEFAULT_EVAL_CAP) -> list[ObligationResult]:
    orders: dict = {}
    return [check_obligation(alg, ob, cap, orders) for ob in obligations]


def suite_passes(results: Sequence[ObligationResult]) -> bool:
    return all(r.ok for r in results)
