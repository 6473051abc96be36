import pytest

from dfrieze.polygon import build_dangulation

OCTAGON_DIAGONALS = [(1, 4), (2, 4), (4, 6), (1, 6), (1, 7)]
OCTAGON_MATRIX = [
    [0, 1, 2, 1, 2, 1, 1, 1],
    [1, 0, 1, 1, 3, 2, 3, 4],
    [2, 1, 0, 1, 4, 3, 5, 7],
    [1, 1, 1, 0, 1, 1, 2, 3],
    [2, 3, 4, 1, 0, 1, 3, 5],
    [1, 2, 3, 1, 1, 0, 1, 2],
    [1, 3, 5, 2, 3, 1, 0, 1],
    [1, 4, 7, 3, 5, 2, 1, 0],
]

DECAGON_DIAGONALS = [(2, 5), (5, 8), (1, 8)]
DECAGON_MATRIX = [
    [0, 1, 2, 2, 1, 2, 2, 1, 1, 1],
    [1, 0, 1, 1, 1, 2, 2, 1, 2, 2],
    [2, 1, 0, 1, 1, 3, 3, 2, 4, 4],
    [2, 1, 1, 0, 1, 3, 3, 2, 4, 4],
    [1, 1, 1, 1, 0, 1, 1, 1, 2, 2],
    [2, 2, 3, 3, 1, 0, 1, 1, 3, 3],
    [2, 2, 3, 3, 1, 1, 0, 1, 3, 3],
    [1, 1, 2, 2, 1, 1, 1, 0, 1, 1],
    [1, 2, 4, 4, 2, 3, 3, 1, 0, 1],
    [1, 2, 4, 4, 2, 3, 3, 1, 1, 0],
]

DODECAGON_DIAGONALS = [(1, 4), (4, 7), (7, 12), (8, 11)]
DODECAGON_MATRIX = [
    [0, 1, 1, 1, 2, 2, 1, 2, 4, 4, 2, 1],
    [1, 0, 1, 1, 3, 3, 2, 4, 8, 8, 4, 2],
    [1, 1, 0, 1, 3, 3, 2, 4, 8, 8, 4, 2],
    [1, 1, 1, 0, 1, 1, 1, 2, 4, 4, 2, 1],
    [2, 3, 3, 1, 0, 1, 1, 3, 6, 6, 3, 2],
    [2, 3, 3, 1, 1, 0, 1, 3, 6, 6, 3, 2],
    [1, 2, 2, 1, 1, 1, 0, 1, 2, 2, 1, 1],
    [2, 4, 4, 2, 3, 3, 1, 0, 1, 1, 1, 1],
    [4, 8, 8, 4, 6, 6, 2, 1, 0, 1, 1, 2],
    [4, 8, 8, 4, 6, 6, 2, 1, 1, 0, 1, 2],
    [2, 4, 4, 2, 3, 3, 1, 1, 1, 1, 0, 1],
    [1, 2, 2, 1, 2, 2, 1, 1, 2, 2, 1, 0],
]


@pytest.fixture
def octagon():
    return build_dangulation(8, 3, OCTAGON_DIAGONALS)


@pytest.fixture
def decagon():
    return build_dangulation(10, 4, DECAGON_DIAGONALS)


@pytest.fixture
def dodecagon():
    return build_dangulation(12, 4, DODECAGON_DIAGONALS)


@pytest.fixture
def pentagon():
    return build_dangulation(5, 3, [(2, 4), (2, 5)])


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when == "call":
                lines.append((props["criterion"], outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines, key=lambda x: int(x[0].split(".")[0])):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
