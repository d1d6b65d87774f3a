"""Deciding the duplicator conditions (L), (L'), (M), (P) and (D).

Witness mode re-verifies supplied Gamma-terms exhaustively. Small domains
are evaluated directly in P_Gamma(N); larger ones through the expanded
coordinate terms, whose variables are compacted before an exhaustive
identity check in N. Search mode runs the exact closure of ``clone``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

import numpy as np

from . import clone
from .algebra import INDEX, FiniteAlgebra
from .duplicator import (Duplicator, all_perms, decode, disjointness_violations, duplicate,
                         expand, generate_permutation_terms, symmetric_group_generators,
                         witness_key)
from .properties import DEFAULT_EVAL_CAP, check_identity
from .terms import App, Term, Var, substitute, term_text, variables

PASS, FAIL, UNKNOWN = "pass", "fail", "unknown"
WITNESS, SEARCH = "witness", "search"
DIRECT_CAP = 1_000_000


@dataclass
class ConditionReport:
    condition: str
    verdict: str
    witnesses: dict[str, str] = field(default_factory=dict)
    counterexample: dict | None = None
    budget: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        out = {"condition": self.condition, "verdict": self.verdict,
               "witnesses": dict(sorted(self.witnesses.items()))}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.budget is not None:
            out["budget"] = self.budget
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _label(g: Duplicator, cond: str) -> str:
    return cond if g.m == 2 else f"{cond}_{g.m}"


# --- targets --------------------------------------------------------------------
# A target is (k, restriction, {coordinate: base term}) with base terms over
# the domain's base variables: x_i = a_i on the diagonal, block layout otherwise.

def l_target(g: Duplicator, symbol: str, coordinate: int):
    n = g.base_sig.arity(symbol)
    return n, clone.DIAGONAL, {coordinate: App(symbol, tuple(Var(i) for i in range(1, n + 1)))}


def m_target(g: Duplicator):
    m = g.m
    return m, clone.FULL, {j: Var(m * (j - 1) + j) for j in range(1, m + 1)}


def p_target(g: Duplicator, perm: tuple[int, ...]):
    return 1, clone.FULL, {j: Var(perm[j - 1]) for j in range(1, g.m + 1)}


# --- verification -----------------------------------------------------------------

def _show(g: Duplicator, term: Term) -> str:
    """Supplied witnesses print as written; derived ones via ``term_text``."""
    w = g.witnesses
    for s, c in w.L.items():
        for i, t in c.items():
            if t is term:
                return w.text(witness_key("L", s, i), t)
    if term is w.M:
        return w.text("M", term)
    for p, t in w.P.items():
        if t is term:
            return w.text(witness_key("P", p), t)
    return term_text(term)


def _diag_subst(g: Duplicator, k: int):
    return [Var((v - 1) // g.m + 1) for v in range(1, g.m * k + 1)]


def verify_witness(g: Duplicator, members: Sequence[FiniteAlgebra], term: Term, target,
                   duplicates=None, cap: int = DEFAULT_EVAL_CAP) -> dict | None:
    """None when ``term`` meets ``target`` on every member, else a counterexample."""
    k, restriction, coords = target
    if any(v > k for v in variables(term)):
        return {"reason": f"witness {term_text(term)} uses more than {k} variables"}
    members = list(members)
    if duplicates is None:
        duplicates = [None] * len(members)
    for N, P in zip(members, duplicates):
        size = clone.domain_size(g, [N], k, restriction)
        if size <= DIRECT_CAP:
            bad = _verify_direct(g, N, P, term, target)
        else:
            bad = _verify_expanded(g, N, term, target, cap)
        if bad is not None:
            bad["member"] = N.name
            return bad
    return None


def _verify_direct(g, N, P, term, target):
    from .terms import eval_vec
    k, restriction, coords = target
    P = P if P is not None else duplicate(g, N)
    dom = clone.build_domain(g, [N], k, restriction, [P])
    got = np.broadcast_to(np.asarray(eval_vec(term, P, dom.cols), dtype=INDEX), (dom.size,))
    got_c = decode(got, N.size, g.m)
    for j, t in sorted(coords.items()):
        want = np.broadcast_to(np.asarray(eval_vec(t, N, dom.base_cols[0]), dtype=INDEX),
                               (dom.size,))
        diff = np.flatnonzero(got_c[j - 1] != want)
        if diff.size:
            i = int(diff[0])
            if restriction == clone.DIAGONAL:
                point = [N.label(int(c[i])) for c in dom.base_cols[0]]
            else:
                point = [P.label(int(c[i])) for c in dom.cols]
            return {"coordinate": j, "point": point,
                    "expected": N.label(int(want[i])), "got": N.label(int(got_c[j - 1][i])),
                    "method": "direct"}
    return None


def _verify_expanded(g, N, term, target, cap):
    k, restriction, coords = target
    exp = expand(g, term)
    sub = _diag_subst(g, k) if restriction == clone.DIAGONAL else None
    for j, want in sorted(coords.items()):
        got = exp[j - 1]
        if sub is not None:
            got = substitute(got, sub)
        used = sorted(variables(got) | variables(want))
        ren = {v: Var(i + 1) for i, v in enumerate(used)}
        args = [ren.get(v, Var(1)) for v in range(1, max(used, default=0) + 1)]
        verdict = check_identity(N, substitute(got, args), substitute(want, args), cap=cap)
        if not verdict.ok:
            point = {f"x{v}": N.label(verdict.witness[i]) for i, v in enumerate(used)}
            return {"coordinate": j, "point": point, "method": "expanded"}
    return None


# --- the conditions -------------------------------------------------------------------

def _duplicates(g, members):
    return [duplicate(g, N) for N in members]


def _perm_str(p) -> str:
    return ",".join(map(str, p))


def _budget(mode, budget, explored=None):
    out = {"mode": mode}
    if mode == SEARCH:
        out["budget"] = budget
        if explored is not None:
            out["explored"] = explored
    return out


def _coordinate_mask(g, dom, symbol, coords):
    """Mask over behaviours: some listed coordinate equals ``symbol`` on the diagonal."""
    n = g.base_sig.arity(symbol)
    want = clone.target_vector(dom, [App(symbol, tuple(Var(i) for i in range(1, n + 1)))])
    sizes = np.concatenate([np.full(b.stop - b.start, N.size) for N, b in zip(dom.members, dom.blocks)])
    powers = [sizes ** (g.m - j) for j in range(1, g.m + 1)]

    def mask(rows):
        ok = np.zeros(rows.shape[0], dtype=bool)
        for j in coords:
            cj = (rows // powers[j - 1][None, :]) % sizes[None, :]
            ok |= np.all(cj == want[None, :], axis=1)
        return ok
    return mask


def check_condition_L(g: Duplicator, members: Sequence[FiniteAlgebra], mode: str = WITNESS,
                      budget: int = clone.DEFAULT_BUDGET, prime: bool = False,
                      max_depth: int | None = None) -> ConditionReport:
    """(L), or (L') with ``prime``: base operations recovered on the diagonal."""
    name = _label(g, "L'" if prime else "L")
    members = list(members)
    dups = _duplicates(g, members)
    rep = ConditionReport(name, PASS, budget=_budget(mode, budget))
    explored = 0
    for symbol, _ in g.base_sig:
        coords = list(range(1, g.m + 1))
        if mode == SEARCH:
            groups = [coords] if prime else [[j] for j in coords]
            for grp in groups:
                k = g.base_sig.arity(symbol)
                if clone.domain_size(g, members, k, clone.DIAGONAL) > clone.DOMAIN_CAP:
                    rep.verdict = UNKNOWN
                    rep.notes.append(f"{symbol}: diagonal domain too large")
                    continue
                dom = clone.build_domain(g, members, k, clone.DIAGONAL, dups)
                res = clone.closure_search(g, members, k, clone.DIAGONAL,
                                           _coordinate_mask(g, dom, symbol, grp), budget,
                                           max_depth, dups)
                explored += res.explored
                key = f"{symbol}@{_perm_str(grp)}" if not prime else symbol
                if res.status == clone.FOUND:
                    # report the coordinate the hit actually realizes
                    j = _which_coord(g, members, dups, res.term, symbol, grp)
                    rep.witnesses[f"{symbol}@{j}"] = term_text(res.term)
                elif res.status == clone.EXHAUSTED:
                    rep.verdict = FAIL
                    rep.counterexample = rep.counterexample or {
                        "symbol": symbol, "coordinates": grp, "certificate": res.certificate(),
                        "behaviours": res.explored}
                else:
                    if rep.verdict == PASS:
                        rep.verdict = UNKNOWN
                    rep.notes.append(f"{key}: {res.certificate()}")
            continue
        found_any = False
        perms = _perm_terms(g)
        for j in coords:
            term = _l_witness(g, symbol, j, perms)
            if term is None:
                if not prime:
                    if rep.verdict == PASS:
                        rep.verdict = UNKNOWN
                    rep.notes.append(f"no witness supplied for {symbol} at coordinate {j}")
                continue
            bad = verify_witness(g, members, term, l_target(g, symbol, j), dups)
            if bad is None:
                rep.witnesses[f"{symbol}@{j}"] = _show(g, term)
                found_any = True
            elif not prime:
                rep.verdict = FAIL
                bad.update(symbol=symbol, witness=_show(g, term))
                rep.counterexample = rep.counterexample or bad
        if prime and not found_any:
            if rep.verdict == PASS:
                rep.verdict = UNKNOWN
            rep.notes.append(f"no verified witness for {symbol} at any coordinate")
    if mode == SEARCH:
        rep.budget = _budget(mode, budget, explored)
    return rep


def _which_coord(g, members, dups, term, symbol, coords):
    for j in coords:
        if verify_witness(g, members, term, l_target(g, symbol, j), dups) is None:
            return j
    return coords[0]


def _perm_terms(g: Duplicator) -> dict:
    if not g.witnesses.P:
        return {}
    return generate_permutation_terms(g.witnesses.P, g.m)


def _l_witness(g: Duplicator, symbol: str, j: int, perms) -> Term | None:
    """Supplied witness for (symbol, j), else one moved over from another coordinate."""
    given = g.witnesses.L.get(symbol, {})
    if j in given:
        return given[j]
    for i, t in sorted(given.items()):
        for p, s in sorted(perms.items()):
            if p[j - 1] == i:
                return substitute(s, [t])
    return None


def check_condition_M(g: Duplicator, members: Sequence[FiniteAlgebra], mode: str = WITNESS,
                      budget: int = clone.DEFAULT_BUDGET,
                      max_depth: int | None = None) -> ConditionReport:
    name = _label(g, "M")
    if g.m == 1:
        return ConditionReport(name, PASS, {"merge": "x1"}, notes=["trivial for one factor"])
    members = list(members)
    target = m_target(g)
    if mode == SEARCH:
        return _search(g, members, name, "merge", target, budget, max_depth)
    if g.witnesses.M is None:
        return ConditionReport(name, UNKNOWN, budget=_budget(mode, budget),
                               notes=["no merge witness supplied"])
    bad = verify_witness(g, members, g.witnesses.M, target)
    if bad is None:
        return ConditionReport(name, PASS, {"merge": _show(g, g.witnesses.M)},
                               budget=_budget(mode, budget))
    bad["witness"] = _show(g, g.witnesses.M)
    return ConditionReport(name, FAIL, counterexample=bad, budget=_budget(mode, budget))


def _search(g, members, name, key, target, budget, max_depth):
    k, restriction, coords = target
    if clone.domain_size(g, members, k, restriction) > clone.DOMAIN_CAP:
        return ConditionReport(name, UNKNOWN, budget=_budget(SEARCH, budget, 0),
                               notes=[f"{key}: domain exceeds {clone.DOMAIN_CAP} points"])
    dups = _duplicates(g, members)
    dom = clone.build_domain(g, members, k, restriction, dups)
    want = clone.target_vector(dom, [coords[j] for j in range(1, g.m + 1)])
    res = clone.closure_search(g, members, k, restriction, want, budget, max_depth, dups)
    b = _budget(SEARCH, budget, res.explored)
    if res.status == clone.FOUND:
        return ConditionReport(name, PASS, {key: term_text(res.term)}, budget=b)
    if res.status == clone.EXHAUSTED:
        return ConditionReport(name, FAIL, counterexample={
            "obligation": key, "certificate": res.certificate(), "behaviours": res.explored},
            budget=b)
    return ConditionReport(name, UNKNOWN, budget=b, notes=[f"{key}: {res.certificate()}"])


def check_condition_P(g: Duplicator, members: Sequence[FiniteAlgebra], mode: str = WITNESS,
                      budget: int = clone.DEFAULT_BUDGET,
                      max_depth: int | None = None) -> ConditionReport:
    name = _label(g, "P")
    if g.m == 1:
        return ConditionReport(name, PASS, notes=["trivial for one factor"])
    members = list(members)
    if mode == SEARCH:
        rep = ConditionReport(name, PASS, budget=_budget(SEARCH, budget, 0))
        explored = 0
        for p in symmetric_group_generators(g.m):
            sub = _search(g, members, name, f"perm {_perm_str(p)}", p_target(g, p), budget, max_depth)
            explored += sub.budget["explored"] if sub.budget else 0
            rep.witnesses.update(sub.witnesses)
            rep.notes.extend(sub.notes)
            if sub.verdict == FAIL:
                rep.verdict = FAIL
                rep.counterexample = rep.counterexample or sub.counterexample
            elif sub.verdict == UNKNOWN and rep.verdict == PASS:
                rep.verdict = UNKNOWN
        rep.budget = _budget(SEARCH, budget, explored)
        return rep
    gens = g.witnesses.P
    if not gens:
        return ConditionReport(name, UNKNOWN, budget=_budget(mode, budget),
                               notes=["no permutation witnesses supplied"])
    dups = _duplicates(g, members)
    rep = ConditionReport(name, PASS, budget=_budget(mode, budget))
    for p, t in sorted(gens.items()):
        bad = verify_witness(g, members, t, p_target(g, p), dups)
        if bad is not None:
            bad.update(permutation=_perm_str(p), witness=_show(g, t))
            return ConditionReport(name, FAIL, counterexample=bad, budget=_budget(mode, budget))
        rep.witnesses[f"perm {_perm_str(p)}"] = _show(g, t)
    group = generate_permutation_terms(gens, g.m)
    if len(group) < factorial(g.m):
        rep.verdict = UNKNOWN
        rep.notes.append(f"witnesses generate {len(group)} of {factorial(g.m)} permutations")
        return rep
    # composed witnesses are Gamma-terms too; re-check every one of them
    for p in all_perms(g.m):
        bad = verify_witness(g, members, group[p], p_target(g, p), dups)
        if bad is not None:
            bad.update(permutation=_perm_str(p), witness=_show(g, group[p]))
            return ConditionReport(name, FAIL, counterexample=bad, budget=_budget(mode, budget))
    rep.notes.append(f"all {factorial(g.m)} permutations realized by composed witnesses")
    return rep


def check_condition_D(g: Duplicator) -> ConditionReport:
    name = _label(g, "D")
    bad = disjointness_violations(g)
    if not bad:
        return ConditionReport(name, PASS, notes=[f"{len(g.entries)} entries checked"])
    first = bad[0]
    return ConditionReport(name, FAIL, counterexample={"entry": first.split(":")[0],
                                                       "reason": first})


def check_duplicator(g: Duplicator, members: Sequence[FiniteAlgebra], mode: str = WITNESS,
                     budget: int = clone.DEFAULT_BUDGET, max_depth: int | None = None):
    """Reports for the conditions relevant to ``g``'s mode."""
    reps = [check_condition_L(g, members, mode, budget, max_depth=max_depth),
            check_condition_M(g, members, mode, budget, max_depth)]
    if g.mode == "disjoint":
        reps.append(check_condition_D(g))
    else:
        reps.append(check_condition_P(g, members, mode, budget, max_depth))
    return reps
