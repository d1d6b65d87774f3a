import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from dupcalc.algebra import FiniteAlgebra
from dupcalc.catalog import catalog_algebra, catalog_duplicator
from dupcalc.terms import Signature

settings.register_profile("dupcalc", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("dupcalc")


@pytest.fixture(scope="session")
def alg():
    return catalog_algebra


@pytest.fixture(scope="session")
def dup():
    return catalog_duplicator


@st.composite
def random_algebras(draw, max_size=4, sig=None):
    """Algebras with arbitrary tables over a small signature."""
    sig = sig or Signature.of(("f", 2), ("g", 1), ("c", 0))
    n = draw(st.integers(1, max_size))
    tables = {}
    for sym, k in sig:
        tables[sym] = np.array(draw(st.lists(st.integers(0, n - 1), min_size=n ** k,
                                             max_size=n ** k)))
    return FiniteAlgebra("R", sig, n, tables)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = mod.summary_lines() if mod is not None else []
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
