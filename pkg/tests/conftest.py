from fractions import Fraction

import pytest

from wmscss.graph import Digraph
from wmscss.instances import gen_bidirected, gen_cycle

HALF = Fraction(1, 2)

_acceptance_lines: list[str] = []


def record_criterion(number: int, title: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def cycle3():
    return gen_cycle(3, 1)


@pytest.fixture
def triangle():
    # arcs: 0:0->1 1:1->0 2:1->2 3:2->1 4:0->2 5:2->0
    return gen_bidirected(3, [(0, 1), (1, 2), (0, 2)], "uniform", 1)


@pytest.fixture
def single_arc():
    return Digraph.from_arcs(2, [(0, 1, 1)])
