import json

import numpy as np
import pytest
from hypothesis import given

from dupcalc.algebra import (AlgebraError, FiniteAlgebra, InputError, all_subuniverses,
                             direct_product, is_homomorphism, load_algebra, subalgebra,
                             subalgebra_generated)
from dupcalc.catalog import catalog_algebra

from conftest import random_algebras


@given(random_algebras())
def test_json_roundtrip(A):
    B = FiniteAlgebra.from_json(json.loads(A.dumps()))
    assert B.same_tables(A) and B.size == A.size


def test_file_roundtrip(tmp_path):
    A = catalog_algebra("4_DBu")
    p = tmp_path / "a.json"
    p.write_text(A.dumps())
    assert load_algebra(p).same_tables(A)


def test_malformed_file_has_line_and_column(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n "name": "x",\n "size": 2,,\n}')
    with pytest.raises(InputError, match=r"line 3, column"):
        load_algebra(p)


def test_missing_field_is_input_error(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"name": "x"}')
    with pytest.raises(InputError, match="signature"):
        load_algebra(p)


def test_bad_table_rejected():
    A = catalog_algebra("2Du")
    with pytest.raises(AlgebraError):
        FiniteAlgebra("x", A.sig, 2, {"join": np.array([0, 1, 1]), "meet": np.array([0, 0, 0, 1])})


def test_product_size_and_projection():
    A, B = catalog_algebra("2Du"), catalog_algebra("3Du")
    P = direct_product([A, B])
    assert P.size == 6
    proj = [x // 3 for x in range(6)]
    assert is_homomorphism(P, A, proj)


def test_subuniverses_of_chain():
    # every subset of a chain is a sublattice
    assert len(all_subuniverses(catalog_algebra("3Du"))) == 2 ** 3


def test_generated_subalgebra():
    M3 = catalog_algebra("M3")
    atoms = [a for a in range(M3.size) if M3.labels[a] not in ("0", "1")]
    # two atoms generate {0, a, b, 1}; the third atom stays out
    assert len(subalgebra_generated(M3, atoms[:2])) == 4
    assert subalgebra_generated(M3, atoms) == list(range(M3.size))
    S, emb = subalgebra(M3, [0])
    assert S.size == 1
