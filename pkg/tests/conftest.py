import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from newton_strata import (
    AffineElement,
    DiagramAutomorphism,
    TripleCandidate,
    WeylElement,
    analyze,
    cartan_type_a,
    load_fixture,
    parse_word,
    qbg_for_rank,
)

EXAMPLE_MU = (150, 75, 0, -75, -150)
EXAMPLE_BOUND = 74
FIXTURE_PATH = (Path(__file__).parent.parent / "src" / "newton_strata"
                / "data" / "conforming_triples_a4.csv")


@pytest.fixture(scope="session")
def cartan4():
    return cartan_type_a(4)


@pytest.fixture(scope="session")
def sigma4(cartan4):
    return DiagramAutomorphism.identity(cartan4)


@pytest.fixture(scope="session")
def qbg4():
    return qbg_for_rank(4)


@pytest.fixture(scope="session")
def example_candidate(sigma4):
    v = WeylElement.from_word(parse_word("4 2 3 1"), 5)
    w = WeylElement.from_word(parse_word("1 2 3 4 2 3 1"), 5)
    return TripleCandidate(v, w, 2, sigma4)


@pytest.fixture(scope="session")
def example_x(example_candidate):
    return AffineElement.from_normal(example_candidate.v, EXAMPLE_MU,
                                     example_candidate.w)


@pytest.fixture(scope="session")
def example_report(example_candidate):
    return analyze(example_candidate, EXAMPLE_MU, EXAMPLE_BOUND)


@pytest.fixture(scope="session")
def table_triples(cartan4, sigma4):
    triples = load_fixture(FIXTURE_PATH, cartan4, sigma4)
    assert len(triples) == 56
    return triples
