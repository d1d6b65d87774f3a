import pytest

from dupcalc.catalog import catalog_algebra, catalog_duplicator
from dupcalc.duplicator import duplicator_from_json
from dupcalc.smoke import equivalence_smoke_test, power_congruence
from dupcalc.congruence import Congruence


@pytest.mark.parametrize("a,b,homs", [("2Du", "2Du", 3), ("2Du", "3Du", 6), ("3Du", "2Du", 4),
                                      ("3Du", "3Du", 10)])
def test_smoke_on_chains(a, b, homs):
    rep = equivalence_smoke_test(catalog_duplicator("Gamma_BLu"), catalog_algebra(a), catalog_algebra(b))
    assert rep.ok
    full = rep.clauses[0].detail
    assert full["base_homs"] == full["duplicated_homs"] == homs


def test_size_limit():
    rep = equivalence_smoke_test(catalog_duplicator("Gamma_BLu"), catalog_algebra("N5"))
    assert not rep.ok and rep.clauses[0].name == "size"


def test_smoke_detects_broken_duplicator():
    data = catalog_duplicator("Gamma_BLu").to_json()
    data["entries"] = data["entries"][:4]          # drop neg: no swap, extra subuniverses
    data.pop("witnesses")
    rep = equivalence_smoke_test(duplicator_from_json(data), catalog_algebra("2Du"))
    assert not rep.ok


def test_power_congruence():
    theta = Congruence((0, 0, 2))
    assert power_congruence(theta, 2).num_blocks() == 4
