import pytest

from dupcalc.catalog import catalog_algebra, catalog_duplicator
from dupcalc.duplicator import duplicate
from dupcalc.free import FreeCapError, free_algebra, universal_property_holds
from dupcalc.homs import find_isomorphism


# sizes of free distributive lattices (no bounds) on 1, 2, 3 generators
@pytest.mark.parametrize("k,size", [(1, 1), (2, 4), (3, 18)])
def test_free_distributive_lattice_sizes(k, size):
    assert free_algebra([catalog_algebra("2Du")], k).size == size


def test_free_boolean_algebra():
    # 2^(2^k) elements
    assert free_algebra([catalog_algebra("2_B")], 2).size == 16


def test_bounded_free_distributive_lattice():
    assert free_algebra([catalog_algebra("2_D")], 1).size == 3


@pytest.mark.parametrize("cls,k,targets", [(["2Du"], 2, ["2Du", "3Du"]),
                                           (["2_D"], 1, ["2_D", "3_D"]),
                                           (["4_DBu"], 1, ["4_DBu"])])
def test_universal_property(cls, k, targets):
    F = free_algebra([catalog_algebra(c) for c in cls], k)
    for t in targets:
        ok, count = universal_property_holds(F, catalog_algebra(t))
        assert ok and count == catalog_algebra(t).size ** k


def test_free_of_duplicate_is_duplicate_of_free():
    g = catalog_duplicator("Gamma_BLu")
    top = free_algebra([catalog_algebra("4_DBu")], 1)
    base = free_algebra([catalog_algebra("2Du")], 2)
    assert top.size == 16
    assert find_isomorphism(top.algebra, duplicate(g, base.algebra)) is not None


def test_non_simple_class_generates_more():
    # M3 generates the modular variety; its 2-generated free algebra is still 4
    assert free_algebra([catalog_algebra("M3")], 2).size == 4
    assert free_algebra([catalog_algebra("2Du"), catalog_algebra("3Du")], 2).size == 4


def test_cap():
    with pytest.raises(FreeCapError) as exc:
        free_algebra([catalog_algebra("2Du")], 3, cap=10)
    assert exc.value.reached == 10


def test_evaluation_homomorphism():
    F = free_algebra([catalog_algebra("3Du")], 2)
    h = F.evaluation(0, [2, 0])
    assert h.is_valid()
    assert h.map[F.generators[0]] == 2 and h.map[F.generators[1]] == 0
