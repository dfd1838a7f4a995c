"""Shared fixtures and strategies for the test suite."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from peakmod import FamilySpec, LatticePath, parse_path
from peakmod.core import DOWN, UP

K1 = FamilySpec(1)
K2 = FamilySpec(2)
K3 = FamilySpec(3)
MOTZKIN = FamilySpec(1, {1: 1})
SCHROEDER = FamilySpec(1, {2: 1})

# the worked big example: k = 2, down-size 10
EXAMPLE_BLOCK = "uuduuuuududd"
EXAMPLE_PATH_TEXT = EXAMPLE_BLOCK + "u" + EXAMPLE_BLOCK + "u" + "uud" + "d"


@pytest.fixture
def example_path() -> LatticePath:
    return parse_path(EXAMPLE_PATH_TEXT, K2)


def dyck(text: str, k: int = 2) -> LatticePath:
    return parse_path(text, FamilySpec(k))


@st.composite
def k_dyck_paths(draw, max_k: int = 3, max_n: int = 5) -> LatticePath:
    """A uniform-ish random valid k-Dyck path built by a feasible walk."""
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(0, max_n))
    ups, downs, h = k * n, n, 0
    steps = []
    while ups or downs:
        moves = []
        if ups:
            moves.append("u")
        if downs and h >= k:
            moves.append("d")
        move = draw(st.sampled_from(moves))
        if move == "u":
            steps.append(UP)
            ups -= 1
            h += 1
        else:
            steps.append(DOWN)
            downs -= 1
            h -= k
    return LatticePath(FamilySpec(k), tuple(steps))
