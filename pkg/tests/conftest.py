import random
from fractions import Fraction

import pytest

from zonobelt import catalog
from zonobelt.exactlin import det

_CRITERIA: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}"
        _CRITERIA.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)


def random_invertible(rng: random.Random, d: int, spread: int = 3):
    while True:
        M = [[Fraction(rng.randint(-spread, spread), rng.randint(1, spread)) for _ in range(d)] for _ in range(d)]
        if det(M) != 0:
            return M


def random_nonzero(rng: random.Random, spread: int = 9) -> Fraction:
    return Fraction(rng.choice([-1, 1]) * rng.randint(1, spread), rng.randint(1, spread))


PARALLELOHEDRA = [
    "cube2", "cube3", "cube4", "permutahedron3", "permutahedron4",
    "hexagonal_prism", "rhombic_dodecahedron", "elongated_dodecahedron",
    "truncated_octahedron", "paper6d",
]


@pytest.fixture(scope="session")
def sharp_v():
    return catalog.paper_example_6d().generators
