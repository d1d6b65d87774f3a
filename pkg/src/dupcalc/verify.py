"""Executable reproduction of the two summary tables.

Each row is a list of claims. A claim is plain data (kind plus arguments),
run by the matching ``_claim_*`` function, which returns a verdict and a
JSON-ready artifact (witness terms, counterexamples, isomorphism maps) that
can be re-checked independently. Rows are independent; reports come back in
table order regardless of how they were executed.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import product as iproduct
from typing import Any, Callable

import numpy as np

from . import clone
from .algebra import AlgebraError, ResourceError
from .axioms import run_suite
from .catalog import catalog_axiom_suite
from .conditions import (FAIL, PASS, SEARCH, UNKNOWN, WITNESS, check_condition_D, check_condition_L,
                         check_condition_M, check_condition_P, check_duplicator)
from .congruence import congruence_lattice, is_subdirectly_irreducible
from .duplicator import decode, duplicate, duplicate_mixed, validate_duplicator
from .free import free_algebra
from .homs import extend_generators, find_isomorphism, separates_into
from .properties import DEFAULT_EVAL_CAP, check_identity, residuum
from .refs import resolve_algebra, resolve_duplicator
from .smoke import congruence_transfer, equivalence_smoke_test
from .terms import TermError

VARIETY = "variety"
FINITE_WITNESS = "finite-witness"
BIG_CAP = 2 * 10 ** 7


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str
    args: dict = field(default_factory=dict)


@dataclass(frozen=True)
class RowSpec:
    id: str
    title: str
    table: str
    duplicator: str
    bases: tuple[str, ...]
    suite: str | None = None
    claims: tuple[Claim, ...] = ()
    scope: str = VARIETY
    suite_cap: int = DEFAULT_EVAL_CAP


@dataclass(frozen=True)
class VerifyConfig:
    mode: str | None = None          # override the per-claim condition mode
    budget: int = clone.DEFAULT_BUDGET
    depth: int | None = None
    cap: int | None = None           # override evaluation caps
    timings: bool = False
    budget_ms: int | None = None     # soft wall-clock limit per row
    jobs: int = 1


@dataclass
class ClaimResult:
    id: str
    verdict: str
    artifact: Any = None
    millis: int | None = None

    def to_json(self) -> dict:
        return {"id": self.id, "verdict": self.verdict, "artifact": self.artifact,
                "millis": self.millis}


@dataclass
class RowReport:
    row: str
    title: str
    table: str
    scope: str
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        vs = {c.verdict for c in self.claims}
        if FAIL in vs:
            return FAIL
        if UNKNOWN in vs:
            return UNKNOWN
        return PASS

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        return {"row": self.row, "title": self.title, "table": self.table, "scope": self.scope,
                "verdict": self.verdict, "claims": [c.to_json() for c in self.claims]}

    @classmethod
    def from_json(cls, d: dict) -> "RowReport":
        return cls(d["row"], d.get("title", ""), d.get("table", ""), d.get("scope", VARIETY),
                   [ClaimResult(c["id"], c["verdict"], c.get("artifact"), c.get("millis"))
                    for c in d["claims"]])


# --- claim implementations ----------------------------------------------------------

def _cap(cfg: VerifyConfig, default: int) -> int:
    return cfg.cap if cfg.cap is not None else default


def _mode(cfg: VerifyConfig, default: str) -> str:
    return cfg.mode or default


def _claim_validate(args, cfg):
    g = resolve_duplicator(args["duplicator"])
    bad = validate_duplicator(g)
    if bad:
        return FAIL, {"violations": bad}
    return PASS, {"entries": len(g.entries), "m": g.m, "mode": g.mode}


def _worst(verdicts) -> str:
    vs = set(verdicts)
    return FAIL if FAIL in vs else UNKNOWN if UNKNOWN in vs else PASS


def _claim_conditions(args, cfg):
    g = resolve_duplicator(args["duplicator"])
    members = [resolve_algebra(b) for b in args["bases"]]
    reps = check_duplicator(g, members, _mode(cfg, args.get("mode", WITNESS)), cfg.budget, cfg.depth)
    return _worst(r.verdict for r in reps), {r.condition: r.to_json() for r in reps}


_CONDITIONS: dict[str, Callable] = {
    "L": lambda g, ms, mode, b, d: check_condition_L(g, ms, mode, b, max_depth=d),
    "L'": lambda g, ms, mode, b, d: check_condition_L(g, ms, mode, b, prime=True, max_depth=d),
    "M": check_condition_M,
    "P": check_condition_P,
    "D": lambda g, ms, mode, b, d: check_condition_D(g),
}


def _claim_condition(args, cfg):
    """One condition with an expected outcome; a correct negative is a pass."""
    g = resolve_duplicator(args["duplicator"])
    members = [resolve_algebra(b) for b in args.get("bases", ())]
    rep = _CONDITIONS[args["condition"]](g, members, _mode(cfg, args.get("mode", WITNESS)),
                                         cfg.budget, cfg.depth)
    expect = args.get("expect", PASS)
    art = {"expected": expect, "report": rep.to_json()}
    if rep.verdict == UNKNOWN:
        return UNKNOWN, art
    return (PASS if rep.verdict == expect else FAIL), art


def _claim_construct(args, cfg):
    A = resolve_algebra(args["algebra"])
    want = args.get("size")
    art = {"size": A.size, "operations": len(A.sig)}
    return (PASS if want is None or A.size == want else FAIL), art


def _claim_suite(args, cfg):
    A = resolve_algebra(args["algebra"])
    res = run_suite(A, catalog_axiom_suite(args["suite"]), _cap(cfg, args.get("cap", DEFAULT_EVAL_CAP)))
    bad = [r for r in res if not r.ok]
    art = {"obligations": len(res)}
    if not bad:
        return PASS, art
    art["failures"] = [r.to_json() for r in bad[:5]]
    resource_only = all(r.error and r.error.startswith("resource:") for r in bad)
    return (UNKNOWN if resource_only else FAIL), art


def _claim_iso(args, cfg):
    algs = [resolve_algebra(r) for r in args["algebras"]]
    maps = []
    for B in algs[1:]:
        h = find_isomorphism(algs[0], B)
        if h is None:
            return FAIL, {"no_isomorphism": [algs[0].name, B.name]}
        maps.append(list(h.map))
    return PASS, {"maps": maps}


def _claim_congruence_transfer(args, cfg):
    g = resolve_duplicator(args["duplicator"])
    A = resolve_algebra(args["base"])
    c = congruence_transfer(g, A)
    want = args.get("count")
    ok = c.ok and (want is None or c.detail["con_base"] == want)
    return (PASS if ok else FAIL), c.detail


def _claim_si_transfer(args, cfg):
    g = resolve_duplicator(args["duplicator"])
    A = resolve_algebra(args["base"])
    si_a, mono_a = is_subdirectly_irreducible(A)
    si_p, mono_p = is_subdirectly_irreducible(duplicate(g, A))
    art = {"base": si_a, "duplicate": si_p,
           "monoliths": [str(mono_a) if mono_a else None, str(mono_p) if mono_p else None]}
    want = args.get("expect")
    ok = si_a == si_p and (want is None or si_a == want)
    return (PASS if ok else FAIL), art


def _claim_con_count(args, cfg):
    n = len(congruence_lattice(resolve_algebra(args["algebra"])))
    return (PASS if n == args["count"] else FAIL), {"congruences": n}


def _claim_free(args, cfg):
    """F({P(N)}, k) is P(F({N}, m k)) with generator i -> (g_{m(i-1)+1}, ..., g_{m i})."""
    g = resolve_duplicator(args["duplicator"])
    N = resolve_algebra(args["base"])
    k = int(args.get("k", 1))
    F_top = free_algebra([duplicate(g, N)], k)
    F_base = free_algebra([N], g.m * k)
    P = duplicate(g, F_base.algebra)
    n = F_base.size
    images = []
    for i in range(k):
        x = 0
        for j in range(g.m):
            x = x * n + F_base.generators[g.m * i + j]
        images.append(x)
    h = extend_generators(F_top.algebra, P, list(F_top.generators), images)
    art = {"free_size": F_top.size, "base_free_size": n, "duplicate_size": P.size}
    want = args.get("size")
    ok = (h is not None and len(set(h.map)) == P.size == F_top.size
          and (want is None or F_top.size == want))
    if h is not None:
        art["map"] = list(h.map)
    return (PASS if ok else FAIL), art


def _claim_smoke(args, cfg):
    g = resolve_duplicator(args["duplicator"])
    rep = equivalence_smoke_test(g, resolve_algebra(args["source"]), resolve_algebra(args["target"]))
    return (PASS if rep.ok else FAIL), rep.to_json()


def _claim_formula(args, cfg):
    """Two algebras on the same labelled universe agree on ``ops`` pointwise."""
    F = resolve_algebra(args["formula"])
    C = resolve_algebra(args["cases"])
    if sorted(F.labels) != sorted(C.labels):
        return FAIL, {"reason": "universes differ", "formula": list(F.labels), "cases": list(C.labels)}
    to_c = np.array([C.labels.index(lbl) for lbl in F.labels])
    checks = 0
    for op in args["ops"]:
        k = F.arity(op)
        for args_f in iproduct(range(F.size), repeat=k):
            checks += 1
            vf = to_c[F.apply(op, list(args_f))]
            vc = C.apply(op, [int(to_c[a]) for a in args_f])
            if vf != vc:
                return FAIL, {"op": op, "args": [F.labels[a] for a in args_f],
                              "formula": C.labels[vf], "cases": C.labels[vc]}
    want = args.get("checks")
    return (PASS if want is None or checks == want else FAIL), {"checks": checks}


def _claim_coordinatewise(args, cfg):
    """op((a_1..a_m),(b_1..b_m)) = (f_1(a_1,b_1), ..., f_m(a_m,b_m)) on P(Gamma; N)."""
    g = resolve_duplicator(args["duplicator"])
    N = resolve_algebra(args["base"])
    P = duplicate(g, N)
    op, fs = args["op"], args["coordinates"]
    k = P.arity(op)
    checks = 0
    for tup in iproduct(range(P.size), repeat=k):
        coords = [decode(np.array([a]), N.size, g.m) for a in tup]
        want = 0
        for j, f in enumerate(fs):
            want = want * N.size + N.apply(f, [int(c[j][0]) for c in coords])
        checks += 1
        got = P.apply(op, list(tup))
        if got != want:
            return FAIL, {"args": [P.labels[a] for a in tup], "got": P.labels[got],
                          "expected": P.labels[want]}
    return PASS, {"checks": checks}


def _claim_identity(args, cfg):
    A = resolve_algebra(args["algebra"])
    v = check_identity(A, args["lhs"], args["rhs"], _cap(cfg, args.get("cap", DEFAULT_EVAL_CAP)))
    if v.ok:
        return PASS, {"lhs": args["lhs"], "rhs": args["rhs"]}
    return FAIL, {"lhs": args["lhs"], "rhs": args["rhs"],
                  "assignment": [A.labels[a] for a in v.witness]}


def _claim_residuum(args, cfg):
    A = resolve_algebra(args["algebra"])
    r = residuum(A, args["meet"])
    expect = args.get("expect", "exists")
    if r.table is None:
        art = {"witness": [A.labels[a] for a in r.witness]}
        return (PASS if expect == "none" else FAIL), art
    art = {"table": [A.labels[int(x)] for x in r.table]}
    if expect == "none":
        return FAIL, art
    imp = args.get("imp")
    if imp is not None:
        same = np.array_equal(np.asarray(r.table), np.asarray(A.tables[imp]))
        art["matches"] = imp
        return (PASS if same else FAIL), art
    return PASS, art


def _claim_separation(args, cfg):
    A = resolve_algebra(args["algebra"])
    members = [resolve_algebra(m) for m in args["into"]]
    ok, info = separates_into(A, members)
    expect = args.get("expect", True)
    if ok:
        art = {"size": A.size, "homs_used": len({(i, h.map) for i, h in info.values()})}
    else:
        art = {"inseparable": [A.labels[info[0]], A.labels[info[1]]]}
    return (PASS if ok == expect else FAIL), art


def _claim_mixed_equals(args, cfg):
    g = resolve_duplicator(args["duplicator"])
    A = resolve_algebra(args["base"])
    M = duplicate_mixed(g, [A] * g.m)
    P = duplicate(g, A)
    same = M.same_tables(P)
    return (PASS if same else FAIL), {"size": P.size}


CLAIM_KINDS: dict[str, Callable] = {
    "validate": _claim_validate,
    "conditions": _claim_conditions,
    "condition": _claim_condition,
    "construct": _claim_construct,
    "suite": _claim_suite,
    "isomorphism": _claim_iso,
    "congruence-transfer": _claim_congruence_transfer,
    "si-transfer": _claim_si_transfer,
    "congruence-count": _claim_con_count,
    "free-algebra": _claim_free,
    "smoke-test": _claim_smoke,
    "formula-consistency": _claim_formula,
    "coordinatewise": _claim_coordinatewise,
    "identity": _claim_identity,
    "residuum": _claim_residuum,
    "separation": _claim_separation,
    "mixed-equals-duplicate": _claim_mixed_equals,
}


def run_claim(claim: Claim, cfg: VerifyConfig) -> ClaimResult:
    fn = CLAIM_KINDS.get(claim.kind)
    if fn is None:
        return ClaimResult(claim.id, FAIL, {"error": f"unknown claim kind {claim.kind!r}"})
    t0 = time.perf_counter()
    try:
        verdict, art = fn(claim.args, cfg)
    except ResourceError as exc:
        verdict, art = UNKNOWN, {"resource": str(exc)}
    except (AlgebraError, TermError, KeyError, ValueError) as exc:
        verdict, art = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
    millis = int(round((time.perf_counter() - t0) * 1000)) if cfg.timings else None
    return ClaimResult(claim.id, verdict, art, millis)


# --- rows ---------------------------------------------------------------------------

def standard_claims(spec: RowSpec) -> list[Claim]:
    g = spec.duplicator
    bases = list(spec.bases)
    out = [Claim(f"validate {g}", "validate", {"duplicator": g}),
           Claim(f"conditions {g} over {','.join(bases)}", "conditions",
                 {"duplicator": g, "bases": bases})]
    for b in bases:
        ref = f"P({g};{b})"
        out.append(Claim(f"construct {ref}", "construct", {"algebra": ref}))
        if spec.suite:
            out.append(Claim(f"suite {spec.suite} on {ref}", "suite",
                             {"algebra": ref, "suite": spec.suite, "cap": spec.suite_cap}))
    return out


def row_claims(spec: RowSpec) -> list[Claim]:
    return standard_claims(spec) + list(spec.claims)


def run_row(spec: RowSpec, cfg: VerifyConfig | None = None) -> RowReport:
    cfg = cfg or VerifyConfig()
    rep = RowReport(spec.id, spec.title, spec.table, spec.scope)
    start = time.perf_counter()
    for claim in row_claims(spec):
        if cfg.budget_ms is not None and (time.perf_counter() - start) * 1000 > cfg.budget_ms:
            rep.claims.append(ClaimResult(claim.id, UNKNOWN,
                                          {"resource": f"row time budget {cfg.budget_ms} ms spent"}))
            continue
        rep.claims.append(run_claim(claim, cfg))
    return rep


def _run_row_job(payload):
    spec, cfg = payload
    return run_row(spec, cfg).to_json()


def run_rows(specs, cfg: VerifyConfig | None = None) -> list[RowReport]:
    cfg = cfg or VerifyConfig()
    specs = list(specs)
    if cfg.jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            docs = list(pool.map(_run_row_job, [(s, cfg) for s in specs]))
        return [RowReport.from_json(d) for d in docs]
    return [run_row(s, cfg) for s in specs]


def run_table(which: str, cfg: VerifyConfig | None = None) -> list[RowReport]:
    from .tables import TABLES
    if which not in TABLES:
        raise KeyError(f"unknown table {which!r}; expected one of {sorted(TABLES)}")
    return run_rows(TABLES[which], cfg)


def find_row(row_id: str) -> RowSpec:
    from .tables import TABLES
    for rows in TABLES.values():
        for r in rows:
            if r.id == row_id:
                return r
    raise KeyError(f"unknown row {row_id!r}")


# --- rendering ----------------------------------------------------------------------

def overall(reports) -> str:
    return _worst(r.verdict for r in reports)


def render_report(reports, fmt: str = "text") -> str:
    reports = list(reports)
    if fmt == "json":
        doc = {"verdict": overall(reports) if reports else PASS,
               "rows": [r.to_json() for r in reports]}
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = []
    for r in reports:
        lines.append(f"{r.verdict.upper():7} {r.row}  ({r.title}; {r.scope})")
        for c in r.claims:
            t = f"  [{c.millis} ms]" if c.millis is not None else ""
            lines.append(f"  {c.verdict.upper():7} {c.id}{t}")
    if reports:
        lines.append(f"overall: {overall(reports)}")
    return "\n".join(lines) + ("\n" if lines else "")


def with_corruption(spec: RowSpec, duplicator_ref: str) -> RowSpec:
    """The same row run against another duplicator (used for fault injection)."""
    def swap(c: Claim) -> Claim:
        args = dict(c.args)
        if args.get("duplicator") == spec.duplicator:
            args["duplicator"] = duplicator_ref
        return replace(c, args=args)
    return replace(spec, duplicator=duplicator_ref, claims=tuple(swap(c) for c in spec.claims))
