import json
from importlib import resources

import jsonschema
import pytest

from dupcalc.cli import main

SCHEMAS = {name: json.loads(resources.files("dupcalc").joinpath("schemas", f"{name}.schema.json")
                            .read_text()) for name in ("algebra", "duplicator", "report", "command")}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


GOLDEN_SCENARIOS = [
    (["check-duplicator", "catalog:Gamma_BLu", "--base", "catalog:2Du", "--mode", "witness"], 0),
    (["check-duplicator", "Gamma_1", "--base", "2_B", "--mode", "search"], 1),
    (["check-duplicator", "Gamma_1", "--base", "2_B", "--mode", "search", "--budget", "0"], 3),
    (["check-duplicator", "Gamma_BLu", "--base", "no_such_algebra"], 2),
    (["iso", "P(Gamma_BL;3_D)", "9_DB"], 0),
    (["iso", "M3", "N5"], 1),
    (["si", "4_DBu"], 0),
    (["si", "3Du"], 1),
    (["residuum", "3_H"], 0),
    (["residuum", "N5"], 1),
    (["separate", "P(Gamma_IT_t;4_DBu)", "--into", "4plus", "4minus"], 0),
    (["smoke", "Gamma_BLu", "2Du", "3Du"], 0),
    (["smoke", "Gamma_BLu", "N5"], 1),
    (["verify-axioms", "4_DBu", "distributive-bilattice"], 0),
    (["verify-axioms", "M3", "distributive-lattice"], 1),
    (["verify-axioms", "256", "trilattice-tfi", "--cap", "1000"], 3),
    (["congruences", "3Du"], 0),
    (["homs", "2Du", "3Du"], 0),
    (["free", "2Du", "-k", "3"], 0),
    (["free", "2Du", "-k", "3", "--cap", "5"], 3),
    (["lift", "Gamma_BLu", "2Du", "3Du", "--map", "0,2"], 0),
    (["lift", "Gamma_BLu", "3Du", "2Du", "--map", "1,0,1"], 1),
    (["lift", "Gamma_BLu", "2Du", "3Du", "--map", "0,7"], 2),
    (["duplicate-mixed", "Gamma_pBL", "2Du", "3Du"], 0),
    (["duplicate-mixed", "Gamma_BLu", "2Du", "3Du"], 2),
    (["reproduce", "Moore/B"], 0),
    (["reproduce", "no/such/row"], 2),
    (["catalog", "list"], 0),
    (["catalog", "show", "catalog:Gamma_BLu"], 0),
    (["catalog", "show", "trilattice-tfi"], 0),
    (["catalog", "show", "nothing"], 2),
]


@pytest.mark.parametrize("argv,code", GOLDEN_SCENARIOS, ids=[" ".join(a) for a, _ in GOLDEN_SCENARIOS])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


@pytest.mark.parametrize("argv,code", [s for s in GOLDEN_SCENARIOS if s[1] != 2],
                         ids=[" ".join(a) for a, c in GOLDEN_SCENARIOS if c != 2])
def test_json_output_validates(capsys, argv, code):
    got, out, _ = run(capsys, *argv, "--json")
    assert got == code
    doc = json.loads(out)
    schema = SCHEMAS["report"] if argv[0] == "reproduce" else SCHEMAS["command"]
    jsonschema.validate(doc, schema)


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check-duplicator", "Gamma_BLu", "--mode", "guess"])
    assert exc.value.code == 2


def test_duplicate_then_iso(capsys, tmp_path):
    out = tmp_path / "out.json"
    assert run(capsys, "duplicate", "catalog:Gamma_BLu", "catalog:2Du", "-o", str(out))[0] == 0
    jsonschema.validate(json.loads(out.read_text()), SCHEMAS["algebra"])
    assert run(capsys, "iso", str(out), "catalog:4_DBu")[0] == 0


def test_malformed_file_reports_position(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "name": "x",\n  "size": 3\n  "ops": {}\n}\n')
    code, _, err = run(capsys, "si", str(bad))
    assert code == 2 and "line 4, column 3" in err
    code, _, err = run(capsys, "check-duplicator", str(bad))
    assert code == 2 and "line 4" in err


def test_bad_term_in_duplicator_file(capsys, tmp_path):
    from dupcalc.catalog import catalog_duplicator
    data = catalog_duplicator("Gamma_BLu").to_json()
    data["entries"][0]["terms"][0] = "(join x1"
    path = tmp_path / "g.json"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "check-duplicator", str(path), "--base", "2Du")
    assert code == 2 and "column" in err


def test_catalog_files_validate():
    from dupcalc.catalog import catalog_algebra, catalog_duplicator, shipped_algebra_keys
    from dupcalc.catalog.duplicators import DUPLICATORS
    for k in shipped_algebra_keys():
        jsonschema.validate(catalog_algebra(k).to_json(), SCHEMAS["algebra"])
    for k in DUPLICATORS:
        jsonschema.validate(catalog_duplicator(k).to_json(), SCHEMAS["duplicator"])


def test_output_file_for_reports(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert run(capsys, "reproduce", "guard/D", "--json", "-o", str(out))[0] == 0
    jsonschema.validate(json.loads(out.read_text()), SCHEMAS["report"])


def test_reproduce_is_byte_deterministic(capsys):
    a = run(capsys, "reproduce", "slash/KL", "implicative/B", "--json")[1]
    b = run(capsys, "reproduce", "slash/KL", "implicative/B", "--json", "--jobs", "2")[1]
    assert a == b
