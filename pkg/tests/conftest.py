"""Shared fixtures: the two small hand-checked filtrations used across the suite.

f1: two vertices joined by an edge, then the edge and one vertex removed.
f2: a filled triangle built bottom-up, then the 2-simplex removed again.
"""
from __future__ import annotations

import pytest

from zigzagrep.filtration import parse_filtration

F1_TEXT = "i 0\ni 1\ni 0 1\nd 0 1\nd 1\n"
F2_TEXT = "i 0\ni 1\ni 2\ni 0 1\ni 0 2\ni 1 2\ni 0 1 2\nd 0 1 2\n"


@pytest.fixture(scope="session")
def f1():
    return parse_filtration(F1_TEXT)


@pytest.fixture(scope="session")
def f2():
    return parse_filtration(F2_TEXT)
