"""``dupcalc`` command line.

Every subcommand resolves its references first (catalog keys, files or the
constructor forms of :mod:`.refs`), runs, and prints text or, with
``--json``, a document. Exit status: 0 all pass, 1 some fail, 2 usage or
input error, 3 something came back unknown (budget or cap reached).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, clone
from .algebra import AlgebraError, Homomorphism, InputError, ResourceError
from .axioms import run_suite
from .catalog import KINDS, CatalogError, catalog_axiom_suite, catalog_entry, catalog_list
from .conditions import FAIL, PASS, SEARCH, UNKNOWN, WITNESS, check_duplicator
from .congruence import congruence_lattice, is_subdirectly_irreducible
from .duplicator import DuplicatorError, duplicate, duplicate_mixed, lift_morphism
from .free import DEFAULT_FREE_CAP, free_algebra
from .homs import enumerate_homomorphisms, find_isomorphism, separates_into
from .properties import DEFAULT_EVAL_CAP, residuum
from .refs import resolve_algebra, resolve_duplicator
from .smoke import equivalence_smoke_test
from .terms import TermError
from .verify import VerifyConfig, find_row, overall, render_report, run_rows
from .verify import run_table as _run_table

EXIT = {PASS: 0, FAIL: 1, UNKNOWN: 3}
TABLE_NAMES = ("table1", "table2")


class Outcome:
    """What a subcommand produced: a verdict, a JSON payload and its text form."""

    def __init__(self, verdict: str, payload: dict, text: str, document: str | None = None):
        self.verdict = verdict
        self.payload = payload
        self.text = text
        self.document = document  # overrides the JSON envelope (reproduce)


def _worst(verdicts) -> str:
    vs = set(verdicts)
    return FAIL if FAIL in vs else UNKNOWN if UNKNOWN in vs else PASS


def _write_algebra(alg, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(alg.to_json(), fh, indent=1)
        fh.write("\n")


def _alg_summary(alg) -> dict:
    return {"name": alg.name, "size": alg.size, "operations": alg.sig.names}


# --- subcommands --------------------------------------------------------------------

def cmd_check_duplicator(a) -> Outcome:
    g = resolve_duplicator(a.duplicator)
    bases = [resolve_algebra(b) for b in a.base]
    reps = check_duplicator(g, bases, a.mode, a.budget, a.depth)
    verdict = _worst(r.verdict for r in reps)
    lines = [f"{g.name} over {', '.join(b.name for b in bases) or '(no bases)'} [{a.mode}]"]
    for r in reps:
        lines.append(f"  {r.condition:4} {r.verdict}")
        for k, w in sorted(r.witnesses.items()):
            lines.append(f"       {k}: {w}")
        if r.counterexample:
            lines.append(f"       counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
        for n in r.notes:
            lines.append(f"       note: {n}")
    return Outcome(verdict, {"duplicator": g.name, "reports": [r.to_json() for r in reps]},
                   "\n".join(lines))


def _construct(alg, a) -> Outcome:
    if a.output:
        _write_algebra(alg, a.output)
        a.output = None  # already consumed
    return Outcome(PASS, _alg_summary(alg), f"{alg.name}: {alg.size} elements, "
                   f"operations {', '.join(alg.sig.names)}")


def cmd_duplicate(a) -> Outcome:
    return _construct(duplicate(resolve_duplicator(a.duplicator), resolve_algebra(a.base)), a)


def cmd_duplicate_mixed(a) -> Outcome:
    g = resolve_duplicator(a.duplicator)
    return _construct(duplicate_mixed(g, [resolve_algebra(f) for f in a.factors]), a)


def cmd_free(a) -> Outcome:
    res = free_algebra([resolve_algebra(r) for r in a.algebras], a.k, a.cap or DEFAULT_FREE_CAP)
    out = _construct(res.algebra, a)
    out.payload["generators"] = list(res.generators)
    return out


def _parse_map(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--map expects comma-separated element indices, got {text!r}") from None


def cmd_lift(a) -> Outcome:
    g = resolve_duplicator(a.duplicator)
    A, B = resolve_algebra(a.source), resolve_algebra(a.target)
    mapping = _parse_map(a.map)
    if len(mapping) != A.size or any(not 0 <= x < B.size for x in mapping):
        raise InputError(f"--map needs {A.size} indices in 0..{B.size - 1}")
    h = Homomorphism(A, B, tuple(mapping))
    if not h.is_valid():
        return Outcome(FAIL, {"reason": "map is not a homomorphism"},
                       f"{mapping} is not a homomorphism {A.name} -> {B.name}")
    lifted = lift_morphism(g, h)
    return Outcome(PASS, {"map": list(lifted.map)},
                   f"lift to {lifted.source.name} -> {lifted.target.name}: {list(lifted.map)}")


def cmd_verify_axioms(a) -> Outcome:
    A = resolve_algebra(a.algebra)
    res = run_suite(A, catalog_axiom_suite(a.suite), a.cap or DEFAULT_EVAL_CAP)
    verdicts = []
    lines = [f"{A.name} against {a.suite}"]
    for r in res:
        v = PASS if r.ok else UNKNOWN if r.error and r.error.startswith("resource:") else FAIL
        verdicts.append(v)
        extra = f"  witness {r.witness}" if r.witness is not None else ""
        extra += f"  ({r.error})" if r.error else ""
        lines.append(f"  {v:7} {r.obligation.id}{extra}")
    return Outcome(_worst(verdicts), {"algebra": A.name, "suite": a.suite,
                                      "obligations": [r.to_json() for r in res]}, "\n".join(lines))


def cmd_congruences(a) -> Outcome:
    A = resolve_algebra(a.algebra)
    con = congruence_lattice(A)
    blocks = [str(c) for c in con.congruences]
    return Outcome(PASS, {"algebra": A.name, "count": len(blocks), "congruences": blocks},
                   f"{A.name}: {len(blocks)} congruences\n" + "\n".join(f"  {b}" for b in blocks))


def cmd_si(a) -> Outcome:
    A = resolve_algebra(a.algebra)
    si, mono = is_subdirectly_irreducible(A)
    text = f"{A.name} is {'' if si else 'not '}subdirectly irreducible"
    if mono is not None:
        text += f"; monolith {mono}"
    return Outcome(PASS if si else FAIL, {"algebra": A.name, "si": si,
                                          "monolith": str(mono) if mono else None}, text)


def cmd_homs(a) -> Outcome:
    A, B = resolve_algebra(a.source), resolve_algebra(a.target)
    found = enumerate_homomorphisms(A, B, limit=a.limit)
    maps = [list(h.map) for h in found.homs]
    text = f"{len(maps)} homomorphisms {A.name} -> {B.name}\n" + "\n".join(f"  {m}" for m in maps)
    return Outcome(PASS, {"source": A.name, "target": B.name, "count": len(maps), "maps": maps}, text)


def cmd_iso(a) -> Outcome:
    A, B = resolve_algebra(a.first), resolve_algebra(a.second)
    h = find_isomorphism(A, B)
    if h is None:
        return Outcome(FAIL, {"isomorphic": False}, f"{A.name} and {B.name} are not isomorphic")
    return Outcome(PASS, {"isomorphic": True, "map": list(h.map)},
                   f"{A.name} ~ {B.name} via {list(h.map)}")


def cmd_residuum(a) -> Outcome:
    A = resolve_algebra(a.algebra)
    r = residuum(A, a.meet, a.op, a.side)
    if r.table is None:
        pair = [A.labels[x] if A.labels else x for x in r.witness]
        return Outcome(FAIL, {"exists": False, "witness": pair},
                       f"no residuum on {A.name}: no largest solution for {pair}")
    table = [int(x) for x in r.table]
    return Outcome(PASS, {"exists": True, "table": table},
                   f"residuum on {A.name}: {table}")


def cmd_separate(a) -> Outcome:
    A = resolve_algebra(a.algebra)
    members = [resolve_algebra(m) for m in a.into]
    ok, info = separates_into(A, members)
    if not ok:
        return Outcome(FAIL, {"separates": False, "pair": list(info)},
                       f"no homomorphism into {', '.join(m.name for m in members)} separates "
                       f"{info[0]} and {info[1]}")
    return Outcome(PASS, {"separates": True, "pairs": len(info)},
                   f"{A.name} embeds in a product of {', '.join(m.name for m in members)}")


def cmd_smoke(a) -> Outcome:
    g = resolve_duplicator(a.duplicator)
    B = resolve_algebra(a.target) if a.target else None
    rep = equivalence_smoke_test(g, resolve_algebra(a.source), B)
    lines = [f"{g.name}: {rep.source} -> {rep.target}"]
    lines += [f"  {'pass' if c.ok else 'fail':7} {c.name} {json.dumps(c.detail, sort_keys=True)}"
              for c in rep.clauses]
    return Outcome(PASS if rep.ok else FAIL, rep.to_json(), "\n".join(lines))


def cmd_reproduce(a) -> Outcome:
    cfg = VerifyConfig(mode=a.mode, budget=a.budget, depth=a.depth, cap=a.cap,
                       timings=a.timings, budget_ms=a.budget_ms, jobs=a.jobs)
    reports = []
    for target in a.targets:
        if target in TABLE_NAMES:
            reports += _run_table(target, cfg)
        else:
            try:
                spec = find_row(target)
            except KeyError as exc:
                raise InputError(str(exc.args[0])) from None
            reports += run_rows([spec], cfg)
    verdict = overall(reports)
    return Outcome(verdict, {}, render_report(reports, "text").rstrip("\n"),
                   document=render_report(reports, "json"))


def cmd_catalog(a) -> Outcome:
    if a.action == "list":
        entries = catalog_list(a.kind)
        rows = [{"key": e.key, "kind": e.kind, "provenance": e.provenance} for e in entries]
        text = "\n".join(f"{e.kind:11} {e.key:22} {e.provenance}" for e in entries)
        return Outcome(PASS, {"entries": rows}, text)
    if not a.key:
        raise InputError("catalog show needs a key")
    e = catalog_entry(a.key.removeprefix("catalog:"))
    if e.kind == "axiom-suite":
        body = [{"id": o.id, "statement": o.describe()} for o in e.payload]
        text = "\n".join(f"{o['id']}: {o['statement']}" for o in body)
    else:
        body = e.payload.to_json()
        text = json.dumps(body, indent=1)
    return Outcome(PASS, {"key": e.key, "kind": e.kind, "provenance": e.provenance,
                          "definition": body}, text)


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON document")
    common.add_argument("-o", "--output", metavar="FILE",
                        help="write the constructed algebra (or the report) to FILE")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--mode", choices=(WITNESS, SEARCH), default=None)
    search.add_argument("--depth", type=int, default=None, help="closure depth limit in search mode")
    search.add_argument("--budget", type=int, default=clone.DEFAULT_BUDGET,
                        help="behaviour budget for search mode")

    capped = argparse.ArgumentParser(add_help=False)
    capped.add_argument("--cap", type=int, default=None, help="evaluation / size cap")

    p = argparse.ArgumentParser(prog="dupcalc", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"dupcalc {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, parents, help):
        sp = sub.add_parser(name, parents=[common, *parents], help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("check-duplicator", cmd_check_duplicator, [search], "check (L)/(M)/(P) or (D)")
    sp.add_argument("duplicator")
    sp.add_argument("--base", action="append", default=[], help="base algebra (repeatable)")

    sp = add("duplicate", cmd_duplicate, [], "build P_Gamma(N)")
    sp.add_argument("duplicator")
    sp.add_argument("base")

    sp = add("duplicate-mixed", cmd_duplicate_mixed, [], "mixed product for a disjoint duplicator")
    sp.add_argument("duplicator")
    sp.add_argument("factors", nargs="+")

    sp = add("lift", cmd_lift, [], "lift a homomorphism h: A -> B to P(A) -> P(B)")
    sp.add_argument("duplicator")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--map", required=True, help="images of 0..|A|-1, comma separated")

    sp = add("verify-axioms", cmd_verify_axioms, [capped], "run an axiom suite")
    sp.add_argument("algebra")
    sp.add_argument("suite")

    sp = add("congruences", cmd_congruences, [], "list the congruence lattice")
    sp.add_argument("algebra")

    sp = add("si", cmd_si, [], "decide subdirect irreducibility")
    sp.add_argument("algebra")

    sp = add("homs", cmd_homs, [], "enumerate homomorphisms")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--limit", type=int, default=None)

    sp = add("iso", cmd_iso, [], "decide isomorphism")
    sp.add_argument("first")
    sp.add_argument("second")

    sp = add("free", cmd_free, [capped], "free algebra of the variety generated by ALGEBRAS")
    sp.add_argument("algebras", nargs="+")
    sp.add_argument("-k", type=int, required=True, help="number of generators")

    sp = add("residuum", cmd_residuum, [], "compute the residuum of a meet (or another operation)")
    sp.add_argument("algebra")
    sp.add_argument("--meet", default="meet")
    sp.add_argument("--op", default=None)
    sp.add_argument("--side", choices=("left", "right"), default="left")

    sp = add("separate", cmd_separate, [], "check points are separated by homs into members")
    sp.add_argument("algebra")
    sp.add_argument("--into", nargs="+", required=True)

    sp = add("smoke", cmd_smoke, [], "equivalence smoke test on small algebras")
    sp.add_argument("duplicator")
    sp.add_argument("source")
    sp.add_argument("target", nargs="?")

    sp = add("reproduce", cmd_reproduce, [search, capped], "re-run the summary tables")
    sp.add_argument("targets", nargs="+", metavar="table1|table2|ROW")
    sp.add_argument("--budget-ms", type=int, default=None,
                    help="soft wall-clock limit per row; later claims report unknown")
    sp.add_argument("--timings", action="store_true", help="record per-claim milliseconds")
    sp.add_argument("--jobs", type=int, default=1, help="rows run in parallel")

    sp = add("catalog", cmd_catalog, [], "list or show catalog entries")
    sp.add_argument("action", choices=("list", "show"))
    sp.add_argument("key", nargs="?")
    sp.add_argument("--kind", choices=KINDS, default=None)
    return p


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    if getattr(a, "mode", None) is None and a.command == "check-duplicator":
        a.mode = WITNESS
    try:
        out = a.func(a)
    except ResourceError as exc:
        out = Outcome(UNKNOWN, {"resource": str(exc)}, f"unknown: {exc}")
    except (InputError, CatalogError, DuplicatorError, TermError, AlgebraError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, CatalogError) and exc.args else exc
        print(f"dupcalc: error: {msg}", file=sys.stderr)
        return 2
    if a.json:
        doc = out.document or json.dumps({"command": a.command, "verdict": out.verdict,
                                          "result": out.payload}, indent=1, sort_keys=True)
        _emit(doc, a.output)
    else:
        _emit(out.text, a.output)
    return EXIT[out.verdict]


if __name__ == "__main__":
    sys.exit(main())
