import os
import sys

import pytest

from cellrook.formats import parse_text
from cellrook.geometry import normalize

sys.path.insert(0, os.path.dirname(__file__))


def rectangle(m, n):
    """An m-wide, n-tall block of cells."""
    return normalize([(x, y) for x in range(1, m + 1) for y in range(1, n + 1)])


L_TROMINO = normalize([(1, 1), (2, 1), (1, 2)])
PLUS = normalize([(2, 1), (1, 2), (2, 2), (3, 2), (2, 3)])
BAR = normalize([(1, 1), (2, 1)])
# the rank-8 polyomino used for the 1+8t+19t^2+14t^3+3t^4 golden value
GOLDEN_RANK8 = parse_text("..#\n..##\n.##\n##\n.#\n")
# domino-stable only when alignment is read as "same coordinate"
COORD_ONLY_STABLE = parse_text(".#\n##.#\n#.#\n")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the slow table reproductions")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running table reproductions")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.environ.get("CELLROOK_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow; use --runslow or CELLROOK_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
