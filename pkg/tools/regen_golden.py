"""Regenerate the golden reports under tests/golden (run after intended changes only)."""

import pathlib
import sys

from dupcalc.verify import find_row, render_report, run_row, run_table

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def main(argv):
    GOLDEN.mkdir(exist_ok=True)
    for row, stem in (("DB/D", "row_DB_D"), ("implicative/B", "row_implicative_B")):
        rep = [run_row(find_row(row))]
        (GOLDEN / f"{stem}.json").write_text(render_report(rep, "json"))
        (GOLDEN / f"{stem}.txt").write_text(render_report(rep, "text"))
    if "--tables" in argv:
        for t in ("table1", "table2"):
            (GOLDEN / f"{t}.json").write_text(render_report(run_table(t), "json"))
    print("golden files written to", GOLDEN)


if __name__ == "__main__":
    main(sys.argv[1:])
