"""Shared fixtures: hand-transcribed reference examples and hypothesis strategies."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from asmlattice.asm import Asm, ParabolicMask, Permutation, enumerate_asms
from asmlattice.parabolic import enumerate_asm_i

# 6x6 example with its monotone triangle
ASM_TRIANGLE_6 = Asm((
    (0, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
    (1, 0, 0, -1, 1, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, -1, 1),
    (0, 0, 0, 0, 1, 0),
))
TRIANGLE_6 = ((2,), (2, 4), (1, 2, 5), (1, 2, 3, 5), (1, 2, 3, 4, 6), (1, 2, 3, 4, 5, 6))

# member of ASM^{4,5}(6) with its three-row partial triangle
TAIL_ASM_6 = Asm((
    (0, 0, 0, 1, 0, 0),
    (0, 0, 1, -1, 1, 0),
    (1, 0, -1, 1, -1, 1),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 0),
))
TAIL_TRIANGLE_6 = ((4,), (3, 5), (1, 4, 6))

# six-vertex picture for I={3}, n=6: horizontal arrows per row, vertical per column
SIXV_ASM_6 = Asm((
    (0, 0, 0, 1, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (1, 0, 0, -1, 1, 0),
    (0, 1, -1, 0, 0, 1),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
))
SIXV_H = ("RRRRLLL", "RRRLLLL", "RLLLRLL", "RRLRRRL", "RRRLLLL", "RRRRLLL")
SIXV_V_COLUMNS = ("UUUDDDD", "UUUUDDD", "UUDDUDD", "UDDUUUD", "UUUDDDD", "UUUUDDD")

# the 14-element lattice ASM^{2}(4): two non-permutation members and 12 permutations
BLOCK2_LEFT = Asm(((0, 1, 0, 0), (1, -1, 1, 0), (0, 0, 0, 1), (0, 1, 0, 0)))
BLOCK2_RIGHT = Asm(((0, 0, 1, 0), (1, 0, 0, 0), (0, 1, -1, 1), (0, 0, 1, 0)))
BLOCK2_EDGES = (
    ("L", "1342"), ("L", "2143"), ("R", "3124"), ("R", "2143"),
    ("1342", "1243"), ("2143", "1243"), ("2143", "2134"), ("3124", "2134"),
    ("1243", "1234"), ("2134", "1234"),
    ("L", "2341"), ("L", "3142"), ("R", "4123"), ("R", "3142"),
    ("2341", "3241"), ("3142", "3241"), ("3142", "4132"), ("4123", "4132"),
    ("3241", "4231"), ("4132", "4231"),
)


def sixv_state_fixture():
    from asmlattice.sixvertex import SixVertexState
    v = tuple("".join(col[s] for col in SIXV_V_COLUMNS) for s in range(7))
    return SixVertexState(tuple(tuple(r) for r in SIXV_H), tuple(tuple(r) for r in v))


def perm(text: str) -> Permutation:
    return Permutation.parse(text)


_ASMS = {n: list(enumerate_asms(n)) for n in range(1, 5)}


def asms(n: int) -> list[Asm]:
    return _ASMS[n]


@st.composite
def asm_pairs(draw, max_n: int = 4):
    n = draw(st.integers(1, max_n))
    items = _ASMS[n]
    return tuple(draw(st.sampled_from(items)) for _ in range(3))


@st.composite
def masked_triples(draw, max_n: int = 4):
    n = draw(st.integers(1, max_n))
    masks = list(ParabolicMask.all_masks(n))
    I = draw(st.sampled_from(masks))
    items = list(enumerate_asm_i(n, I))
    return I, tuple(draw(st.sampled_from(items)) for _ in range(3))


@pytest.fixture(scope="session")
def asm4() -> list[Asm]:
    return _ASMS[4]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
