import pytest

from dupcalc.catalog import catalog_algebra, catalog_duplicator
from dupcalc.conditions import (FAIL, PASS, SEARCH, UNKNOWN, check_condition_D, check_condition_L,
                                check_condition_M, check_condition_P, check_duplicator)
from dupcalc.duplicator import duplicator_from_json, expand
from dupcalc.properties import check_identity
from dupcalc.terms import Var, parse_term, substitute

BASES = {
    "Gamma_BLu": ["2Du", "3Du", "2x2", "M3", "N5"],
    "Gamma_BL": ["2_D", "3_D", "2x2_D", "M3_D", "N5_D"],
    "Gamma_pBL": ["2Du", "3Du", "M3"],
    "Gamma_DBCu": ["4_DMu"],
    "Gamma_DBC": ["4_DM", "3_DM", "2_B"],
    "Gamma_TLtf": ["4_DBu"],
    "Gamma_TLtfi_binary": ["16_DBCu"],
    "Gamma_TLtfi_4ary": ["4_DMu"],
    "Gamma_TLtf_4ary": ["2Du"],
    "Gamma_TL_4": ["2Du", "3Du"],
    "Gamma_IT": ["4_pDBu"],
    "Gamma_IT_t": ["4_DBu"],
    "Gamma_H": ["2_H", "3_H", "2x2_H"],
    "Gamma_H_prime": ["2_H", "3_H", "2x2_H"],
    "Gamma_BR": ["3_Br"],
    "Gamma_bH": ["2_bH", "3_bH", "2x2_bH"],
    "Gamma_bH_k": ["2_bH", "3_bH", "2x2_bH"],
    "Gamma_guard": ["2_D", "3_D"],
    "Gamma_slash": ["3_DM", "2_B"],
    "Gamma_imp": ["2_B"],
    "Gamma_imp_u": ["2_GB"],
    "Gamma_L": ["2_B"],
    "Gamma_RBL": ["3_RL_G", "3_RL_L", "3_RL_nc"],
    "Gamma_MBL": ["BM_2"],
}


@pytest.mark.parametrize("key", sorted(BASES))
def test_catalog_witnesses_verify(key):
    g = catalog_duplicator(key)
    members = [catalog_algebra(b) for b in BASES[key]]
    reps = check_duplicator(g, members)
    assert [r.verdict for r in reps] == [PASS] * 3, [r.to_json() for r in reps if not r.ok]


@pytest.mark.parametrize("key", ["Gamma_BLu", "Gamma_DBC", "Gamma_H", "Gamma_TLtf"])
def test_passing_witnesses_reverify_by_expansion(key):
    """Independent re-check: expand each reported witness and compare in the base."""
    g = catalog_duplicator(key)
    N = catalog_algebra(BASES[key][0])
    for sym, coords in g.witnesses.L.items():
        for j, t in coords.items():
            ts = expand(g, t)
            k = g.base_sig.arity(sym)
            # on the diagonal every block is constant: collapse block i to x_{i+1}
            diag = parse_term(f"({sym} {' '.join(f'x{i + 1}' for i in range(k))})" if k else sym,
                              g.base_sig)
            squash = [Var(i // g.m + 1) for i in range(g.m * max(k, 1))]
            assert check_identity(N, substitute(ts[j - 1], squash), diag).ok, (sym, j)


def test_search_example_negative_certificates():
    B = [catalog_algebra("2_B")]
    g1, g2 = catalog_duplicator("Gamma_1"), catalog_duplicator("Gamma_2")
    p1 = check_condition_P(g1, B, SEARCH)
    assert p1.verdict == FAIL and p1.counterexample["behaviours"] <= 36
    assert check_condition_L(g1, B, SEARCH, prime=True).verdict == PASS
    assert check_condition_P(g2, B, SEARCH).verdict == PASS
    l2 = check_condition_L(g2, B, SEARCH, prime=True)
    assert l2.verdict == FAIL
    assert l2.counterexample["behaviours"] == 3
    assert "neg" in str(l2.counterexample) or "'" in str(l2.counterexample)


def test_search_is_monotone_in_budget():
    B = [catalog_algebra("2_B")]
    g1 = catalog_duplicator("Gamma_1")
    verdicts = [check_condition_P(g1, B, SEARCH, budget=b).verdict for b in (0, 1, 3, 100, 10_000)]
    assert verdicts[0] == UNKNOWN
    seen_fail = False
    for v in verdicts:
        seen_fail |= v == FAIL
        if seen_fail:
            assert v == FAIL


def test_search_finds_merge_for_bilattice():
    rep = check_condition_M(catalog_duplicator("Gamma_BLu"), [catalog_algebra("2Du")], SEARCH)
    assert rep.verdict == PASS


def test_missing_witness_is_unknown():
    data = catalog_duplicator("Gamma_BLu").to_json()
    del data["witnesses"]["M"]
    g = duplicator_from_json(data)
    assert check_condition_M(g, [catalog_algebra("2Du")]).verdict == UNKNOWN


def test_corrupted_duplicator_fails_with_counterexample():
    data = catalog_duplicator("Gamma_BLu").to_json()
    # neg no longer swaps: (x1, x2) instead of (x2, x1)
    data["entries"][4]["terms"] = ["x1", "x2"]
    g = duplicator_from_json(data)
    rep = check_condition_P(g, [catalog_algebra("2Du")])
    assert rep.verdict == FAIL
    ce = rep.counterexample
    assert ce["permutation"] == "2,1" and ce["witness"] == "(neg x1)"


def test_disjointness():
    assert check_condition_D(catalog_duplicator("Gamma_IT")).verdict == PASS
    assert check_condition_D(catalog_duplicator("Gamma_pBL")).verdict == PASS
    rep = check_condition_D(catalog_duplicator("Gamma_BLu"))
    assert rep.verdict == FAIL and rep.counterexample["entry"]


def test_four_factor_conditions_labelled():
    reps = check_duplicator(catalog_duplicator("Gamma_TLtfi_4ary"), [catalog_algebra("4_DMu")])
    assert [r.condition for r in reps] == ["L_4", "M_4", "P_4"]
    assert all(r.ok for r in reps)
