import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from baerlat.corpus import (FIXTURES, EnumerationConfig, enumerate_structures, fixture,
                            gen_boolean, gen_chain, gen_zn)
from baerlat.corpus.generators import is_squarefree
from baerlat.quantale import is_reduced


@lru_cache(maxsize=None)
def corpus():
    """The standard corpus as (name, structure) pairs.

    Fixtures, chains with up to 7 steps, Boolean algebras of rank up to 4,
    Z_n for squarefree n <= 210 and every enumerated structure with n <= 4.
    """
    out = [(name, fixture(name)) for name in FIXTURES]
    out += [(f"chain:{k}", gen_chain(k)) for k in range(1, 8)]
    out += [(f"boolean:{k}", gen_boolean(k)) for k in range(1, 5)]
    out += [(f"zn:{n}", gen_zn(n)) for n in range(2, 211) if is_squarefree(n)]
    out += [(f"enum:{i}", M) for i, M in
            enumerate(enumerate_structures(EnumerationConfig(4, min_n=1)))]
    return tuple(out)


@lru_cache(maxsize=None)
def reduced_corpus():
    return tuple((name, M) for name, M in corpus() if is_reduced(M))


@lru_cache(maxsize=None)
def small_corpus():
    """Fixtures plus the enumerated structures up to n = 4 (fast loops)."""
    return tuple((name, M) for name, M in corpus()
                 if name in FIXTURES or name.startswith("enum:"))


@pytest.fixture
def C3():
    return fixture("C3")


@pytest.fixture
def B2():
    return fixture("B2")


@pytest.fixture
def N4():
    return fixture("N4")


@pytest.fixture
def Z30():
    return fixture("Z30")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
