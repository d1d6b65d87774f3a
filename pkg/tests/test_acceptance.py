"""Acceptance criteria 1-11, one test each.

Every test records a PASS/FAIL line (printed in the terminal summary) and
asserts. All checks are exact; the pinned tolerances are wall-clock limits.
"""

import json
import pathlib
import subprocess
import sys
import time
from itertools import product

import numpy as np
import pytest

from dupcalc.algebra import all_subuniverses, direct_product, subalgebra, subalgebra_generated
from dupcalc.axioms import run_suite
from dupcalc.catalog import catalog_algebra, catalog_axiom_suite, catalog_duplicator
from dupcalc.conditions import (FAIL, PASS, SEARCH, check_condition_D, check_condition_L,
                                check_condition_P, check_duplicator)
from dupcalc.congruence import congruence_lattice, is_subdirectly_irreducible
from dupcalc.duplicator import decode, duplicate, duplicate_mixed
from dupcalc.free import free_algebra
from dupcalc.homs import extend_generators, find_isomorphism, separates_into
from dupcalc.properties import check_adjointness, check_identity, residuum
from dupcalc.refs import resolve_algebra
from dupcalc.smoke import congruence_transfer, density, fullness
from dupcalc.terms import eval_vec

# pinned wall-clock limits (seconds)
LIMITS = {1: 1.0, 2: 1.0, 3: 1.0, 4: 5.0, 5: 5.0, 6: 10.0, 7: 60.0, 8: 5.0, 9: 5.0, 10: 10.0,
          11: 300.0}
GOLDEN = pathlib.Path(__file__).parent / "golden"
RESULTS: dict[int, tuple[bool, str]] = {}


class Criterion:
    def __init__(self, n: int, title: str):
        self.n, self.title, self.notes = n, title, []

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        ok = exc_type is None and dt < LIMITS[self.n]
        detail = f"{self.title}; {dt:.2f} s (limit {LIMITS[self.n]:g} s)"
        if self.notes:
            detail += "; " + "; ".join(self.notes)
        if exc_type is not None:
            detail += f"; {exc_type.__name__}: {exc}"
        RESULTS[self.n] = (ok, detail)
        if exc_type is None:
            assert dt < LIMITS[self.n], detail
        return False


def test_criterion_01_bilattice_duplicator_witnesses():
    bases = ["2Du", "3Du", "2x2", "M3", "N5"]
    with Criterion(1, "Gamma_BLu witness mode over 5 lattices, merge selects (a,d)") as c:
        g = catalog_duplicator("Gamma_BLu")
        members = [catalog_algebra(b) for b in bases]
        reps = check_duplicator(g, members)
        assert [r.verdict for r in reps] == [PASS, PASS, PASS]
        L = reps[0].witnesses
        assert {k for k in L} == {"join@1", "join@2", "meet@1", "meet@2"}
        assert reps[1].witnesses == {"merge": "(v x1 x2)"}
        assert reps[2].witnesses["perm 2,1"] == "(neg x1)"
        pairs = 0
        for N in members:
            P = duplicate(g, N)
            x, y = np.divmod(np.arange(P.size ** 2), P.size)
            got = eval_vec(g.witnesses.M, P, [x, y])
            a, _ = decode(x, N.size, 2)
            _, d = decode(y, N.size, 2)
            assert (got == a * N.size + d).all()
            pairs += P.size ** 2
        c.notes.append(f"merge checked on {pairs} pairs")


def test_criterion_02_four_element_distributive_bilattice():
    with Criterion(2, "P(Gamma_BLu;2Du) ~ 4_DBu and passes distributive-bilattice") as c:
        P = duplicate(catalog_duplicator("Gamma_BLu"), catalog_algebra("2Du"))
        h = find_isomorphism(P, catalog_algebra("4_DBu"))
        assert h is not None and h.is_valid()
        suite = catalog_axiom_suite("distributive-bilattice")
        res = run_suite(P, suite)
        assert all(r.ok for r in res)
        dist = sum("-over-" in o.id for o in suite)
        neg = sum(o.id.startswith("neg") for o in suite)
        assert dist == 12 and neg == 4
        c.notes.append(f"{len(res)} obligations ({dist} distributivities, {neg} negation laws)")


def test_criterion_03_negative_certificates():
    B = [catalog_algebra("2_B")]
    with Criterion(3, "Gamma_1 fails (P), Gamma_2 fails (L') by exhausted closures") as c:
        t0 = time.perf_counter()
        p1 = check_condition_P(catalog_duplicator("Gamma_1"), B, SEARCH)
        t1 = time.perf_counter()
        l2 = check_condition_L(catalog_duplicator("Gamma_2"), B, SEARCH, prime=True)
        t2 = time.perf_counter()
        assert p1.verdict == FAIL and "exhausted" in p1.counterexample["certificate"]
        assert p1.counterexample["behaviours"] <= 36
        assert l2.verdict == FAIL and "exhausted" in l2.counterexample["certificate"]
        assert l2.counterexample["behaviours"] == 3
        assert l2.counterexample["symbol"] == "neg"
        assert t1 - t0 < 1 and t2 - t1 < 1
        c.notes.append(f"Gamma_1 (P): {p1.counterexample['behaviours']} behaviours; "
                       f"Gamma_2 (L') at {l2.counterexample['symbol']}: 3 behaviours")


def test_criterion_04_congruences_and_si():
    with Criterion(4, "Con(3-chain) has 4 elements and transfers; SI transfers for 2-chain") as c:
        g = catalog_duplicator("Gamma_BLu")
        A = catalog_algebra("3Du")
        assert len(congruence_lattice(A)) == 4
        clause = congruence_transfer(g, A)
        assert clause.ok and clause.detail["con_duplicate"] == 4
        si_base, _ = is_subdirectly_irreducible(catalog_algebra("2Du"))
        si_dup, _ = is_subdirectly_irreducible(catalog_algebra("4_DBu"))
        assert si_base and si_dup
        assert len(congruence_lattice(catalog_algebra("2Du"))) == 2
        assert len(congruence_lattice(catalog_algebra("4_DBu"))) == 2
        c.notes.append("both 2-chain and 4_DBu simple")


def test_criterion_05_free_algebra():
    with Criterion(5, "F(4_DBu;1) has 16 elements and is P(Gamma_BLu; F(2Du;2))") as c:
        g = catalog_duplicator("Gamma_BLu")
        top = free_algebra([catalog_algebra("4_DBu")], 1)
        base = free_algebra([catalog_algebra("2Du")], 2)
        assert top.size == 16 and base.size == 4
        P = duplicate(g, base.algebra)
        g0, g1 = base.generators
        image = g0 * base.size + g1          # x -> (x, y) with the two free generators
        h = extend_generators(top.algebra, P, [top.generators[0]], [image])
        assert h is not None and h.is_valid() and len(set(h.map)) == 16
        c.notes.append("generator map extends to a bijective homomorphism")


def test_criterion_06_equivalence_smoke():
    expected = {("2Du", "2Du"): 3, ("2Du", "3Du"): 6, ("3Du", "2Du"): 4, ("3Du", "3Du"): 10}
    with Criterion(6, "homomorphisms and subuniverses of duplicates are products") as c:
        g = catalog_duplicator("Gamma_BLu")
        for (a, b), n in expected.items():
            A, B = catalog_algebra(a), catalog_algebra(b)
            cl = fullness(g, A, B)
            assert cl.ok and cl.detail["base_homs"] == cl.detail["duplicated_homs"] == n
        for a in ("2Du", "3Du"):
            A = catalog_algebra(a)
            assert density(g, A).ok
            P = duplicate(g, A)
            for S in all_subuniverses(P):
                proj = {x // A.size for x in S}
                assert set(S) == {p * A.size + q for p in proj for q in proj}
        c.notes.append("hom counts " + ", ".join(f"{a}->{b}={n}" for (a, b), n in expected.items()))


def test_criterion_07_trilattice_pipeline():
    with Criterion(7, "trilattice pipeline: Gamma_TLtf, three-way 256, separation") as c:
        g = catalog_duplicator("Gamma_TLtf")
        assert all(r.ok for r in check_duplicator(g, [catalog_algebra("4_DBu")]))
        P16 = duplicate(g, catalog_algebra("4_DBu"))
        assert P16.size == 16
        assert all(r.ok for r in run_suite(P16, catalog_axiom_suite("trilattice-tf")))
        A = duplicate(catalog_duplicator("Gamma_TLtfi_binary"), catalog_algebra("16_DBCu"))
        B = duplicate(catalog_duplicator("Gamma_TLtfi_4ary"), catalog_algebra("4_DMu"))
        C = catalog_algebra("256")
        assert find_isomorphism(A, B) is not None
        assert find_isomorphism(A, C) is not None
        assert find_isomorphism(B, C) is not None
        signed = [catalog_algebra(k) for k in ("2pp", "2pm", "2mp", "2mm")]
        prod = direct_product(signed[:2])
        rng = np.random.default_rng(7)
        samples = 0
        for _ in range(12):
            seed = sorted(set(rng.integers(0, prod.size, size=int(rng.integers(1, 4))).tolist()))
            S, _ = subalgebra(prod, subalgebra_generated(prod, seed))
            ok, _ = separates_into(S, signed)
            assert ok
            samples += 1
        c.notes.append(f"{samples} sampled subalgebras separate")


def test_criterion_08_residuation():
    with Criterion(8, "residua, N5 failure, imp_k coordinatewise, derived imp_k formula") as c:
        for key in ("2_D", "3Du", "2x2"):
            A = catalog_algebra(key)
            r = residuum(A, "meet")
            assert r.table is not None and check_adjointness(A, "meet", r.table).ok
        r = residuum(catalog_algebra("N5"), "meet")
        assert r.table is None and r.witness is not None
        H = catalog_algebra("3_H")
        P = duplicate(catalog_duplicator("Gamma_H"), H)
        for x, y in product(range(P.size), repeat=2):
            a, b = divmod(x, 3)
            cc, d = divmod(y, 3)
            assert P.apply("imp_k", [x, y]) == H.apply("imp", [a, cc]) * 3 + H.apply("imp", [b, d])
        Q = duplicate(catalog_duplicator("Gamma_bH_k"), catalog_algebra("2x2_bH"))
        rhs = ("(join_k (meet_k (imp_t x1 x2) top_t) "
               "(meet_k (neg (imp_t (neg x1) (neg x2))) bot_t))")
        assert check_identity(Q, "(imp_k x1 x2)", rhs).ok
        c.notes.append(f"imp_k checked on 81 pairs; formula on {Q.size ** 2} pairs")


def test_criterion_09_formula_consistency():
    cases = [("P(Gamma_guard;2_D)", "4_guard", "guard", 16),
             ("P(Gamma_imp;2_B)", "4_imp", "imp", 16),
             ("P(Gamma_L;2_B)", "4_L", "L", 4),
             ("P(Gamma_slash;3_DM)", "9_slash", "slash", 9)]
    with Criterion(9, "guard, implication, Moore L and slash match their case tables") as c:
        counts = []
        for ref, key, op, want in cases:
            F, C = resolve_algebra(ref), catalog_algebra(key)
            to_c = [C.labels.index(lbl) for lbl in F.labels]
            n = 0
            for args in product(range(F.size), repeat=F.arity(op)):
                assert to_c[F.apply(op, list(args))] == C.apply(op, [to_c[a] for a in args])
                n += 1
            assert n == want
            counts.append(n)
        for g, bases in (("Gamma_guard", ["2_D"]), ("Gamma_imp", ["2_B"]), ("Gamma_L", ["2_B"]),
                         ("Gamma_slash", ["3_DM"]), ("Gamma_MBL", ["BM_2"])):
            reps = check_duplicator(catalog_duplicator(g), [catalog_algebra(b) for b in bases])
            assert all(r.ok for r in reps), g
        M = resolve_algebra("P(Gamma_MBL;BM_2)")
        for lhs, rhs in (("(box top_t)", "top_t"),
                         ("(box (meet_t x1 x2))", "(meet_t (box x1) (box x2))"),
                         ("(box (imp bot_k x1))", "(imp bot_k (box x1))")):
            assert check_identity(M, lhs, rhs).ok
        c.notes.append("checks " + "/".join(map(str, counts)) + "; 3 box equations")


def test_criterion_10_mixed_products():
    with Criterion(10, "(D) for Gamma_IT, 2-chain (.) 3-chain, Gamma_BLu not (D), 4-ary tfi") as c:
        assert check_condition_D(catalog_duplicator("Gamma_IT")).verdict == PASS
        M = duplicate_mixed(catalog_duplicator("Gamma_pBL"),
                            [catalog_algebra("2Du"), catalog_algebra("3Du")])
        assert M.size == 6
        assert all(r.ok for r in run_suite(M, catalog_axiom_suite("pre-bilattice-interlaced")))
        assert check_condition_D(catalog_duplicator("Gamma_BLu")).verdict == FAIL
        reps = check_duplicator(catalog_duplicator("Gamma_TLtfi_4ary"), [catalog_algebra("4_DMu")])
        assert [(r.condition, r.verdict) for r in reps] == [("L_4", PASS), ("M_4", PASS),
                                                            ("P_4", PASS)]
        c.notes.append("mixed product has 6 elements")


def _reproduce(table):
    t0 = time.perf_counter()
    out = subprocess.run([sys.executable, "-m", "dupcalc", "reproduce", table, "--json"],
                         capture_output=True, text=True)
    return out, time.perf_counter() - t0


def test_criterion_11_reproduce_tables():
    with Criterion(11, "reproduce table1 and table2 exit 0, byte-identical to golden") as c:
        total = 0.0
        for table in ("table1", "table2"):
            out, dt = _reproduce(table)
            total += dt
            assert out.returncode == 0, out.stderr
            assert out.stdout == (GOLDEN / f"{table}.json").read_text(), f"{table} differs from golden"
            doc = json.loads(out.stdout)
            assert doc["verdict"] == PASS
            c.notes.append(f"{table}: {len(doc['rows'])} rows in {dt:.1f} s")
        assert total < LIMITS[11]


def summary_lines() -> list[str]:
    """One PASS/FAIL line per criterion that ran (printed by conftest)."""
    return [f"{'PASS' if RESULTS[n][0] else 'FAIL'} criterion {n:2d}: {RESULTS[n][1]}"
            for n in sorted(RESULTS)]
