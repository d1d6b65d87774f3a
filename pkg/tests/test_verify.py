import json
import pathlib

import numpy as np
import pytest

from dupcalc.algebra import is_homomorphism
from dupcalc.catalog import catalog_duplicator
from dupcalc.conditions import FAIL, PASS, UNKNOWN
from dupcalc.duplicator import decode, duplicate, load_duplicator
from dupcalc.properties import check_adjointness
from dupcalc.refs import resolve_algebra
from dupcalc.tables import TABLE1, TABLE2, TABLES
from dupcalc.terms import eval_term, parse_term
from dupcalc.verify import (CLAIM_KINDS, Claim, RowReport, RowSpec, VerifyConfig, find_row,
                            render_report, row_claims, run_claim, run_row, with_corruption)

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def db_row():
    return run_row(find_row("DB/D"))


def test_table_shapes():
    assert len(TABLE1) == 13
    assert len({r.id for r in TABLE1 + TABLE2}) == len(TABLE1) + len(TABLE2)
    for rows in TABLES.values():
        for spec in rows:
            for c in row_claims(spec):
                assert c.kind in CLAIM_KINDS


def test_finite_witness_rows_are_labelled():
    fw = {r.id for r in TABLE1 + TABLE2 if r.scope == "finite-witness"}
    assert {"BL/L", "RBL/RL", "MBL/BM", "BLk/H", "BLt/bH"} <= fw
    assert "DB/D" not in fw


@pytest.mark.parametrize("stem,row", [("row_DB_D", "DB/D"), ("row_implicative_B", "implicative/B")])
def test_golden_reports(stem, row):
    rep = [run_row(find_row(row))]
    assert render_report(rep, "json") == (GOLDEN / f"{stem}.json").read_text()
    assert render_report(rep, "text") == (GOLDEN / f"{stem}.txt").read_text()


def test_json_roundtrip(db_row):
    doc = json.loads(render_report([db_row], "json"))
    again = RowReport.from_json(doc["rows"][0])
    assert render_report([again], "json") == render_report([db_row], "json")
    assert all(c["millis"] is None for c in doc["rows"][0]["claims"])


def test_timings_opt_in():
    rep = run_row(find_row("Moore/B"), VerifyConfig(timings=True))
    assert all(isinstance(c.millis, int) for c in rep.claims)


def test_empty_report():
    assert render_report([], "text") == ""
    assert json.loads(render_report([], "json")) == {"rows": [], "verdict": "pass"}
    with pytest.raises(ValueError):
        render_report([], "yaml")


def test_artifacts_reverify(db_row):
    """Isomorphism maps, witnesses and free-algebra maps are checked again from scratch."""
    arts = {c.id: c.artifact for c in db_row.claims}
    A, B = resolve_algebra("P(Gamma_BLu;2Du)"), resolve_algebra("4_DBu")
    (m,) = arts["isomorphic P(Gamma_BLu;2Du) ~ 4_DBu"]["maps"]
    assert is_homomorphism(A, B, m) and sorted(m) == list(range(B.size))
    cond = arts["conditions Gamma_BLu over 2Du"]
    assert cond["M"]["witnesses"]["merge"] == "(v x1 x2)"
    assert cond["P"]["witnesses"]["perm 2,1"] == "(neg x1)"
    free = arts["free algebra on one generator"]
    assert free["free_size"] == 16 and sorted(free["map"]) == list(range(16))


def test_residuum_artifact_reverifies():
    rep = run_claim(Claim("r", "residuum", {"algebra": "3_H", "meet": "meet", "imp": "imp"}),
                    VerifyConfig())
    A = resolve_algebra("3_H")
    table = [A.labels.index(x) for x in rep.artifact["table"]]
    assert rep.verdict == PASS and check_adjointness(A, "meet", table).ok


def test_fault_injection_localizes(tmp_path):
    data = catalog_duplicator("Gamma_BL").to_json()
    neg = next(e for e in data["entries"] if e["name"] == "neg")
    neg["terms"] = ["x1", "x2"]                      # neg no longer swaps
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    rep = run_row(with_corruption(find_row("DB/D"), str(path)))
    assert rep.verdict == FAIL
    bad = next(c for c in rep.claims if c.id.startswith("conditions") and c.verdict == FAIL)
    ce = bad.artifact["P"]["counterexample"]
    assert ce["permutation"] == "2,1"
    # re-check: the swap wants coordinate 1 of neg(a1,a2) to be a2; evaluate directly
    g = load_duplicator(path)
    N = resolve_algebra("2_D")
    P = duplicate(g, N)
    (pt,) = ce["point"]
    a1, a2 = decode(np.array([P.element(pt)]), N.size, 2)
    got = decode(np.array([P.apply("neg", [P.element(pt)])]), N.size, 2)[ce["coordinate"] - 1]
    assert N.label(int(a2[0])) == ce["expected"] and N.label(int(got[0])) == ce["got"]
    assert ce["expected"] != ce["got"]
    # and the suite failure's witness assignment breaks the stated identity
    suite = next(c for c in rep.claims if c.id.startswith("suite") and c.verdict == FAIL)
    f = suite.artifact["failures"][0]
    lhs, rhs = f["statement"].split(" = ")
    env = f["witness"]
    assert eval_term(parse_term(lhs, P.sig), P, env) != eval_term(parse_term(rhs, P.sig), P, env)


def test_budget_zero_only_affects_search_claims():
    rep = run_row(find_row("DBC/DM"), VerifyConfig(budget=0))
    for c in rep.claims:
        if c.id.endswith("(search)"):
            assert c.verdict == UNKNOWN
        else:
            assert c.verdict == PASS, c.id
    assert rep.verdict == UNKNOWN


def test_budget_ms_makes_later_claims_unknown():
    rep = run_row(find_row("DB/D"), VerifyConfig(budget_ms=0))
    assert rep.claims[-1].verdict == UNKNOWN
    assert "time budget" in rep.claims[-1].artifact["resource"]


def test_unknown_claim_kind_fails():
    assert run_claim(Claim("x", "teleport"), VerifyConfig()).verdict == FAIL


def test_unresolvable_key_fails_claim():
    spec = RowSpec("x", "x", "t", "Gamma_nope", ("2Du",))
    rep = run_row(spec)
    assert rep.claims[0].verdict == FAIL and "nope" in rep.claims[0].artifact["error"]


def test_parallel_rows_match_serial():
    from dupcalc.verify import run_rows
    specs = [find_row("guard/D"), find_row("Moore/B"), find_row("slash/KL")]
    serial = render_report(run_rows(specs), "json")
    assert render_report(run_rows(specs, VerifyConfig(jobs=3)), "json") == serial
