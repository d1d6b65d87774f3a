import numpy as np
import pytest
from hypothesis import given, strategies as st

from dupcalc.catalog import catalog_duplicator
from dupcalc.catalog.duplicators import DUPLICATORS
from dupcalc.terms import (App, Signature, TermError, Var, depth, eval_term, eval_vec, fold,
                           indexed_term, parse_term, render_term, substitute, term_text, tree_size,
                           variables)

from conftest import random_algebras

SIG = Signature.of(("f", 2), ("g", 1), ("c", 0))


def terms(max_var=3):
    leaves = st.one_of(st.integers(1, max_var).map(Var), st.just(App("c")))
    return st.recursive(leaves, lambda kids: st.one_of(
        kids.map(lambda a: App("g", (a,))),
        st.tuples(kids, kids).map(lambda ab: App("f", ab))), max_leaves=20)


def naive_eval(t, A, env):
    if isinstance(t, Var):
        return env[t.index - 1]
    return A.apply(t.symbol, [naive_eval(c, A, env) for c in t.children])


@given(terms())
def test_parse_render_roundtrip(t):
    assert parse_term(render_term(t), SIG) == t


def test_roundtrip_on_catalog_terms():
    for key in DUPLICATORS:
        g = catalog_duplicator(key)
        for e in g.entries:
            for t in e.terms:
                assert parse_term(render_term(t), g.base_sig) == t


@given(terms(), random_algebras(), st.data())
def test_eval_is_compositional(t, A, data):
    env = data.draw(st.lists(st.integers(0, A.size - 1), min_size=3, max_size=3))
    assert eval_term(t, A, env) == naive_eval(t, A, env)


@given(terms(), random_algebras())
def test_eval_vec_matches_pointwise(t, A):
    cols = [np.arange(A.size ** 3) // A.size ** (2 - j) % A.size for j in range(3)]
    got = np.broadcast_to(eval_vec(t, A, cols), cols[0].shape)
    for i in range(len(cols[0])):
        assert got[i] == eval_term(t, A, [int(c[i]) for c in cols])


@given(random_algebras(), st.integers(2, 4), st.data())
def test_indexed_term_selects_coordinates(A, width, data):
    i = data.draw(st.integers(1, width))
    j = data.draw(st.integers(1, width))
    t = indexed_term("f", width, [i, j], SIG)
    for env in np.ndindex(*(A.size,) * width):
        assert eval_term(t, A, env) == A.apply("f", [env[i - 1], env[j - 1]])


def test_indexed_shorthand_parses():
    assert parse_term("f/4[1,3]", SIG) == App("f", (Var(1), Var(3)))


@pytest.mark.parametrize("text,col", [("(f x1", None), ("(h x1)", None), ("(f x1 x2 x3)", None),
                                      ("f/2[1,5]", None), ("(f x0 x1)", None)])
def test_malformed_terms_raise(text, col):
    with pytest.raises(TermError):
        parse_term(text, SIG)


def test_error_reports_column():
    with pytest.raises(TermError, match="column"):
        parse_term("(f x1 ?)", SIG)


def test_substitute_and_variables():
    t = parse_term("(f x1 (g x2))", SIG)
    s = substitute(t, [Var(2), App("c")])
    assert render_term(s) == "(f x2 (g c))"
    assert variables(s) == {2}
    assert depth(t) == 2


def test_shared_dag_stays_linear():
    # 60 levels of sharing: the tree has ~2^60 nodes, the DAG 61
    t = Var(1)
    for _ in range(60):
        t = App("f", (t, t))
    assert tree_size(t) == 2 ** 61 - 1
    assert "nodes" in term_text(t)
    assert fold(t, lambda v: 1, lambda a, cs: max(cs) + 1) == 61
    s = substitute(t, [App("g", (Var(2),))])
    assert variables(s) == {2}
