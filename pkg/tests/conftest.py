import random

import pytest

from rdvhc.graph import Graph
from rdvhc.reduction import BipartiteInstance, reduce

C4_EDGES = [(1, 1), (1, 2), (2, 1), (2, 2)]
K33_EDGES = [(i, j) for i in range(1, 4) for j in range(1, 4)]
# two C4s (m1 m2 n3 n4) and (m3 m4 n1 n2) joined by the bridge m1 n1:
# B has no Hamiltonian cycle, yet the reduced graph has one
BRIDGED_C4S = [(1, 1), (1, 3), (1, 4), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1), (4, 2)]
BRIDGED_C4S_G_CYCLE = ("Y2 A4_2 X4 A3_1 Y1 A4_1 Z1 A1_1 X1 A1_3 Y3 A2_3 X2 A2_4 Y4 A1_4 X3 A3_2").split()


@pytest.fixture
def c4():
    return BipartiteInstance(2, C4_EDGES)


@pytest.fixture
def c4_red(c4):
    return reduce(c4)


@pytest.fixture
def k33():
    return BipartiteInstance(3, K33_EDGES)


@pytest.fixture
def k33_red(k33):
    return reduce(k33)


@pytest.fixture
def bridged():
    return BipartiteInstance(4, BRIDGED_C4S)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    names = [f"v{k}" for k in range(n)]
    edges = [(names[a], names[b]) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return Graph(names, edges)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
