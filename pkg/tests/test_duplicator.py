from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dupcalc.algebra import Homomorphism, all_subuniverses
from dupcalc.catalog import catalog_algebra, catalog_duplicator
from dupcalc.duplicator import (DuplicatorError, coordinate_of_variable, decode, duplicate,
                                duplicate_mixed, duplicator_from_json, encode, expand, lift_morphism,
                                validate_duplicator)
from dupcalc.homs import enumerate_homomorphisms
from dupcalc.refs import RefError, resolve_algebra, resolve_duplicator, union
from dupcalc.terms import eval_term

PAIRS = [("Gamma_BLu", "2Du"), ("Gamma_BLu", "M3"), ("Gamma_BL", "3_D"), ("Gamma_DBC", "3_DM"),
         ("Gamma_TLtf", "4_DBu"), ("Gamma_TLtf_4ary", "2Du"), ("Gamma_TL_4", "3Du"),
         ("Gamma_pBL", "N5"), ("Gamma_H", "3_H"), ("Gamma_RBL", "3_RL_L")]


@pytest.mark.parametrize("g,n", PAIRS)
def test_size_is_power(g, n):
    G, N = catalog_duplicator(g), catalog_algebra(n)
    assert duplicate(G, N).size == N.size ** G.m


@given(st.integers(2, 5), st.integers(1, 4), st.data())
def test_encode_decode_roundtrip(n, m, data):
    codes = np.array(data.draw(st.lists(st.integers(0, n ** m - 1), min_size=1, max_size=20)))
    assert (encode(decode(codes, n, m), n) == codes).all()
    # first coordinate is the most significant digit
    assert (decode(codes, n, m)[0] == codes // n ** (m - 1)).all()


def test_block_variable_layout():
    assert coordinate_of_variable(1, 2) == (1, 1)
    assert coordinate_of_variable(2, 2) == (1, 2)
    assert coordinate_of_variable(3, 2) == (2, 1)
    assert coordinate_of_variable(8, 4) == (2, 4)


@pytest.mark.parametrize("g,n", PAIRS[:6])
def test_operations_evaluate_coordinate_terms(g, n):
    """op(a_1..a_k)_j = t_j(block values), recomputed from base tables."""
    G, N = catalog_duplicator(g), catalog_algebra(n)
    P = duplicate(G, N)
    rng = np.random.default_rng(0)
    for e in G.entries:
        for _ in range(20):
            args = [int(rng.integers(P.size)) for _ in range(e.arity)]
            flat = [int(c[0]) for a in args for c in decode(np.array([a]), N.size, G.m)]
            want = encode([np.array([eval_term(t, N, flat or [0])]) for t in e.terms], N.size)[0]
            assert P.apply(e.name, args) == want


def test_merge_selects_outer_coordinates():
    G, N = catalog_duplicator("Gamma_BLu"), catalog_algebra("3Du")
    P = duplicate(G, N)
    merge = G.witnesses.M
    for x, y in product(range(P.size), repeat=2):
        (a,), (b,) = decode(np.array([x]), 3, 2)
        (c,), (d,) = decode(np.array([y]), 3, 2)
        assert eval_term(merge, P, [x, y]) == a * 3 + d


def test_validation_catches_problems():
    data = catalog_duplicator("Gamma_BLu").to_json()
    data["entries"][0]["terms"] = ["join/4[1,3]"]
    assert validate_duplicator(duplicator_from_json(data))
    data = catalog_duplicator("Gamma_BLu").to_json()
    data["entries"][0]["terms"][0] = "(join x1 x5)"
    assert validate_duplicator(duplicator_from_json(data)) == [
        "join_t: coordinate 1 term has span 5 > 2*2"]
    data["mode"] = "sideways"
    with pytest.raises(DuplicatorError):
        duplicator_from_json(data)


def test_catalog_duplicators_validate():
    from dupcalc.catalog import check_catalog_duplicators
    assert all(not v for v in check_catalog_duplicators().values())


def test_mixed_of_equal_factors_is_duplicate():
    for g in ("Gamma_pBL", "Gamma_IT", "Gamma_TL_4"):
        G = catalog_duplicator(g)
        for n in ("2Du", "3Du") if G.m == 2 else ("2Du",):
            A = resolve_algebra(n) if g != "Gamma_IT" else catalog_algebra("4_pDBu")
            assert duplicate_mixed(G, [A] * G.m).same_tables(duplicate(G, A))


def test_mixed_needs_disjoint_mode():
    with pytest.raises(Exception):
        duplicate_mixed(catalog_duplicator("Gamma_BLu"), [catalog_algebra("2Du"), catalog_algebra("3Du")])


@pytest.mark.parametrize("a,b", [("2Du", "2Du"), ("2Du", "3Du"), ("3Du", "2Du"), ("3Du", "3Du")])
def test_lift_is_functorial(a, b):
    G = catalog_duplicator("Gamma_BLu")
    A, B = catalog_algebra(a), catalog_algebra(b)
    PA, PB = duplicate(G, A), duplicate(G, B)
    ident = lift_morphism(G, Homomorphism(A, A, tuple(range(A.size))), PA, PA)
    assert ident.map == tuple(range(PA.size))
    for h in enumerate_homomorphisms(A, B).homs:
        lh = lift_morphism(G, h, PA, PB)
        assert lh.is_valid()
        for k in enumerate_homomorphisms(B, A).homs:
            lk = lift_morphism(G, k, PB, PA)
            # (k after h) lifted equals lift(k) after lift(h)
            assert lift_morphism(G, k.compose(h), PA, PA).map == lk.compose(lh).map


@pytest.mark.parametrize("base", ["2Du", "3Du"])
def test_closed_subsets_are_squares(base):
    """A subuniverse closed under merge and swap is the square of its projection."""
    G, N = catalog_duplicator("Gamma_BLu"), catalog_algebra(base)
    P = duplicate(G, N)
    for S in all_subuniverses(P):
        first = {x // N.size for x in S}
        second = {x % N.size for x in S}
        assert first == second
        assert set(S) == {a * N.size + b for a in first for b in first}


def test_expand_gives_coordinate_terms():
    G = catalog_duplicator("Gamma_BLu")
    ts = expand(G, G.witnesses.M)
    assert len(ts) == 2
    N = catalog_algebra("3Du")
    for env in product(range(3), repeat=4):
        assert eval_term(ts[0], N, env) == env[0]
        assert eval_term(ts[1], N, env) == env[3]


def test_refs():
    assert resolve_algebra("P(Gamma_BLu;2Du)").size == 4
    assert resolve_algebra("Prod(2Du,3Du)").size == 6
    assert resolve_algebra("Mixed(Gamma_pBL;2Du,3Du)").size == 6
    assert resolve_algebra("F(2Du;2)").size == 4
    assert resolve_algebra("Reduct(4_DBu;join_t,meet_t)").sig.names == ["join_t", "meet_t"]
    assert resolve_algebra("catalog:2-chain").size == 2
    g = resolve_duplicator("Gamma_H+Gamma_H_prime")
    assert {"imp_k", "bimp"} <= set(g.names())
    with pytest.raises(RefError):
        resolve_algebra("nope")
    with pytest.raises(RefError):
        resolve_algebra("P(Gamma_BLu;2Du")
    with pytest.raises(RefError):
        union([catalog_duplicator("Gamma_H"), catalog_duplicator("Gamma_BLu")])
