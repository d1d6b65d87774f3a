"""Regenerate the shipped catalog JSON from the Python definitions.

Usage: python3 tools/build_catalog.py
"""

import json
import pathlib

from dupcalc.catalog import SHIP_LIMIT, build_algebra
from dupcalc.catalog.algebras import ALGEBRAS
from dupcalc.catalog.duplicators import DUPLICATORS

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "dupcalc" / "catalog" / "data"


def main():
    (DATA / "algebras").mkdir(parents=True, exist_ok=True)
    (DATA / "duplicators").mkdir(parents=True, exist_ok=True)
    for key in ALGEBRAS:
        alg = build_algebra(key)
        if alg.size > SHIP_LIMIT:
            continue
        (DATA / "algebras" / f"{key}.json").write_text(alg.dumps() + "\n", encoding="utf-8")
    for key, doc in DUPLICATORS.items():
        (DATA / "duplicators" / f"{key}.json").write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
