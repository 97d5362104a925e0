import random

import pytest

from mralg.table import FiniteStructure, relabel

ACCEPTANCE_LINES: list[str] = []


def diamond() -> FiniteStructure:
    """``{a, b, a v b, 1}`` with Delta the identity on comparable pairs."""
    join = [[0, 2, 2, 3], [2, 1, 2, 3], [2, 2, 2, 3], [3, 3, 3, 3]]
    delta = [[0, -1, -1, -1], [-1, 1, -1, -1], [0, 1, 2, -1], [0, 1, 2, 3]]
    return FiniteStructure(4, 3, join, delta=delta, labels=["a", "b", "a v b", "1"])


def singleton(with_caret=True) -> FiniteStructure:
    return FiniteStructure(1, 0, [[0]], caret=[[0]] if with_caret else None, delta=[[0]])


def shuffled(s: FiniteStructure, seed: int) -> FiniteStructure:
    order = list(range(s.size))
    random.Random(seed).shuffle(order)
    return relabel(s, order)


@pytest.fixture
def diamond_structure():
    return diamond()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
