"""Identities, induced orders, monotonicity and residuation on finite algebras."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import INDEX, AlgebraError, FiniteAlgebra, ResourceError, all_tuples
from .terms import Term, eval_vec, free_variable_span, parse_term

DEFAULT_EVAL_CAP = 10_000_000
_CHUNK = 1 << 20


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check; ``witness`` is a counterexample on failure."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def _as_term(t, alg: FiniteAlgebra) -> Term:
    return parse_term(t, alg.sig) if isinstance(t, str) else t


def check_identity(alg: FiniteAlgebra, lhs, rhs, cap: int = DEFAULT_EVAL_CAP) -> Verdict:
    """Evaluate ``lhs = rhs`` on every assignment; return the first failure."""
    lhs, rhs = _as_term(lhs, alg), _as_term(rhs, alg)
    span = max(free_variable_span(lhs), free_variable_span(rhs))
    n = alg.size
    total = n ** span
    if total > cap:
        raise ResourceError(f"identity needs {total} evaluations, cap is {cap}")
    if span == 0:
        a, b = eval_vec(lhs, alg, []), eval_vec(rhs, alg, [])
        return Verdict(bool(a == b), None if a == b else ())
    # chunk over the leading variables so memory stays bounded
    per = max(1, _CHUNK // max(1, n ** (span - 1)))
    tail = all_tuples(n, span - 1)
    for start in range(0, n, per):
        firsts = np.arange(start, min(n, start + per), dtype=INDEX)
        cols = [np.repeat(firsts, tail.shape[0])]
        cols += [np.tile(tail[:, j], firsts.size) for j in range(span - 1)]
        lv = np.broadcast_to(eval_vec(lhs, alg, cols), cols[0].shape)
        rv = np.broadcast_to(eval_vec(rhs, alg, cols), cols[0].shape)
        bad = np.flatnonzero(lv != rv)
        if bad.size:
            i = bad[0]
            return Verdict(False, tuple(int(c[i]) for c in cols))
    return Verdict(True)


def induced_order(alg: FiniteAlgebra, meet: str) -> np.ndarray:
    """``leq[a, b]`` iff ``meet(a, b) == a``; validated as a partial order."""
    if alg.arity(meet) != 2:
        raise AlgebraError(f"{meet} is not binary")
    n = alg.size
    T = alg.cube(meet)
    leq = T == np.arange(n)[:, None]
    if not leq.diagonal().all():
        raise AlgebraError(f"{meet} is not idempotent: induced relation not reflexive")
    if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
        raise AlgebraError(f"{meet} does not induce an antisymmetric relation")
    comp = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    if np.any(comp & ~leq):
        raise AlgebraError(f"{meet} does not induce a transitive relation")
    return leq


def check_monotonicity(alg: FiniteAlgebra, op: str, leq: np.ndarray, antitone=()) -> Verdict:
    """Check ``op`` preserves ``leq`` in each argument (reverses it in ``antitone`` positions).

    Positions are 1-based. The witness is ``(position, args_low, args_high)``.
    """
    k = alg.arity(op)
    if k == 0:
        return Verdict(True)
    rest = all_tuples(alg.size, k - 1)
    lo, hi = np.nonzero(leq & ~np.eye(alg.size, dtype=bool))
    per = max(1, _CHUNK // max(1, rest.shape[0]))
    for p in range(k):
        for start in range(0, lo.size, per):
            a = np.repeat(lo[start:start + per], rest.shape[0])
            b = np.repeat(hi[start:start + per], rest.shape[0])
            tail = [np.tile(rest[:, j], min(per, lo.size - start)) for j in range(k - 1)]
            cols_a = tail[:p] + [a] + tail[p:]
            cols_b = tail[:p] + [b] + tail[p:]
            fa = alg.apply_vec(op, cols_a)
            fb = alg.apply_vec(op, cols_b)
            good = leq[fb, fa] if p + 1 in antitone else leq[fa, fb]
            bad = np.flatnonzero(~good)
            if bad.size:
                i = bad[0]
                return Verdict(False, (p + 1, tuple(int(c[i]) for c in cols_a),
                                       tuple(int(c[i]) for c in cols_b)))
    return Verdict(True)


def _sup(leq: np.ndarray, elems) -> int | None:
    elems = list(elems)
    n = leq.shape[0]
    ups = [u for u in range(n) if all(leq[e, u] for e in elems)]
    for u in ups:
        if all(leq[u, v] for v in ups):
            return u
    return None


@dataclass(frozen=True)
class Residuum:
    table: np.ndarray | None
    witness: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.table is not None


def residuum(alg: FiniteAlgebra, meet: str, op: str | None = None, side: str = "left") -> Residuum:
    """Residual of ``op`` (default: ``meet``) in the order induced by ``meet``.

    ``side='left'`` gives ``a -> c`` = largest ``b`` with ``op(a, b) <= c``;
    ``side='right'`` gives ``c <- b`` = largest ``a`` with ``op(a, b) <= c``,
    tabulated at ``(c, b)``. On failure ``witness`` is the pair at which the
    supremum of the candidates is not itself a candidate.
    """
    leq = induced_order(alg, meet)
    op = op or meet
    n = alg.size
    T = alg.cube(op)
    table = np.empty(n * n, dtype=INDEX)
    for a in range(n):
        for c in range(n):
            if side == "left":
                cands = [b for b in range(n) if leq[T[a, b], c]]
            else:
                cands = [x for x in range(n) if leq[T[x, a], c]]
            top = _sup(leq, cands)
            if top is None:
                return Residuum(None, (a, c))
            ok = leq[T[a, top], c] if side == "left" else leq[T[top, a], c]
            if not ok:
                return Residuum(None, (a, c))
            if side == "left":
                table[a * n + c] = top
            else:
                table[c * n + a] = top
    return Residuum(table)


def check_adjointness(alg: FiniteAlgebra, meet: str, imp: np.ndarray, op: str | None = None) -> Verdict:
    """``op(a, b) <= c`` iff ``b <= imp(a, c)`` for all triples."""
    leq = induced_order(alg, meet)
    T = alg.cube(op or meet)
    I = np.asarray(imp).reshape(alg.size, alg.size)
    n = alg.size
    for a in range(n):
        lhs = leq[T[a][:, None], np.arange(n)[None, :]]  # [b, c]
        rhs = leq[np.arange(n)[:, None], I[a][None, :]]  # [b, c]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return Verdict(False, (a, int(b), int(c)))
    return Verdict(True)
