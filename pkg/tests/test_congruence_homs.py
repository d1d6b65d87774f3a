from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dupcalc.algebra import is_homomorphism
from dupcalc.catalog import catalog_algebra
from dupcalc.congruence import (Congruence, congruence_lattice, is_compatible,
                                is_subdirectly_irreducible, principal_congruence, quotient_by)
from dupcalc.homs import enumerate_homomorphisms, find_isomorphism
from dupcalc.properties import check_adjointness, residuum

from conftest import random_algebras


def partitions(n):
    def rec(i, rep):
        if i == n:
            yield tuple(rep)
            return
        for r in sorted(set(rep)) + [i]:
            yield from rec(i + 1, rep + [r])
    yield from rec(0, [])


def brute_congruences(A):
    return {p for p in partitions(A.size) if is_compatible(A, Congruence(p))}


@pytest.mark.parametrize("key", ["2Du", "3Du", "2x2", "M3", "N5", "4_DBu", "3_DM", "4_DMu"])
def test_congruence_lattice_matches_brute_force(key):
    A = catalog_algebra(key)
    assert {c.rep for c in congruence_lattice(A).congruences} == brute_congruences(A)


@settings(max_examples=25)
@given(random_algebras(max_size=5))
def test_congruence_lattice_random(A):
    assert {c.rep for c in congruence_lattice(A).congruences} == brute_congruences(A)


@settings(max_examples=25)
@given(random_algebras(max_size=5), st.data())
def test_principal_congruence_is_least(A, data):
    a = data.draw(st.integers(0, A.size - 1))
    b = data.draw(st.integers(0, A.size - 1))
    theta = principal_congruence(A, a, b)
    assert theta.related(a, b)
    for p in brute_congruences(A):
        c = Congruence(p)
        if c.related(a, b):
            assert theta <= c
    q, proj = quotient_by(A, theta)
    assert proj.map[a] == proj.map[b] and proj.is_valid()
    assert q.size == theta.num_blocks()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chain_congruences_count(n):
    # lattice congruences of an n-chain: cut any subset of the n-1 covers
    from dupcalc.catalog.algebras import chain
    assert len(congruence_lattice(chain(n))) == 2 ** (n - 1)


def test_subdirect_irreducibility():
    assert is_subdirectly_irreducible(catalog_algebra("2Du"))[0]
    assert not is_subdirectly_irreducible(catalog_algebra("3Du"))[0]
    assert is_subdirectly_irreducible(catalog_algebra("4_DBu"))[0]
    assert is_subdirectly_irreducible(catalog_algebra("M3"))[0]


def brute_homs(A, B):
    return {m for m in product(range(B.size), repeat=A.size) if is_homomorphism(A, B, m)}


@pytest.mark.parametrize("a,b", [("2Du", "2Du"), ("2Du", "3Du"), ("3Du", "2Du"), ("3Du", "3Du"),
                                 ("N5", "2Du"), ("M3", "2Du"), ("2x2", "3Du"), ("3_DM", "2_B")])
def test_homomorphisms_match_brute_force(a, b):
    A, B = catalog_algebra(a), catalog_algebra(b)
    found = enumerate_homomorphisms(A, B).homs
    assert {h.map for h in found} == brute_homs(A, B)
    assert all(h.is_valid() for h in found)


def test_chain_hom_counts():
    counts = {(a, b): len(enumerate_homomorphisms(catalog_algebra(a), catalog_algebra(b)).homs)
              for a in ("2Du", "3Du") for b in ("2Du", "3Du")}
    assert counts == {("2Du", "2Du"): 3, ("2Du", "3Du"): 6, ("3Du", "2Du"): 4, ("3Du", "3Du"): 10}


@settings(max_examples=30)
@given(random_algebras(max_size=4), st.data())
def test_find_isomorphism_cross_check(A, data):
    perm = data.draw(st.permutations(range(A.size)))
    inv = np.argsort(perm)
    tables = {}
    for s, k in A.sig:
        t = np.empty(A.size ** k, dtype=np.int64)
        for args in np.ndindex(*(A.size,) * k):
            x = 0
            for v in args:
                x = x * A.size + int(perm[v])
            t[x] = perm[A.apply(s, list(args))]
        tables[s] = t
    from dupcalc.algebra import FiniteAlgebra
    B = FiniteAlgebra("B", A.sig, A.size, tables)
    h = find_isomorphism(A, B)
    assert h is not None and h.is_valid() and h.is_injective()
    bij = [m for m in brute_homs(A, B) if len(set(m)) == A.size]
    assert h.map in bij


def test_non_isomorphic():
    assert find_isomorphism(catalog_algebra("M3"), catalog_algebra("N5")) is None
    from dupcalc.catalog.algebras import chain
    assert find_isomorphism(catalog_algebra("2x2"), chain(4)) is None
    assert find_isomorphism(catalog_algebra("2x2"),
                            catalog_algebra("4_DMu").reduct(["join", "meet"])) is not None


@pytest.mark.parametrize("key", ["2_D", "3Du", "2x2", "3_H", "2x2_H", "M3"])
def test_residuum_adjointness(key):
    A = catalog_algebra(key)
    r = residuum(A, "meet")
    if key == "M3":
        assert r.table is None
        return
    assert r.table is not None
    assert check_adjointness(A, "meet", r.table).ok


def test_residuum_three_chain_values():
    A = catalog_algebra("3_H")
    r = residuum(A, "meet")
    lab = A.labels
    imp = {(lab[a], lab[c]): lab[int(r.table[a * 3 + c])] for a in range(3) for c in range(3)}
    top = lab[2]
    assert imp[(lab[2], lab[1])] == lab[1]
    assert imp[(lab[0], lab[1])] == top
    assert imp[(lab[1], lab[0])] == lab[0]


def test_n5_has_no_residuum():
    r = residuum(catalog_algebra("N5"), "meet")
    assert r.table is None and r.witness is not None
