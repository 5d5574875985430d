"""Six-vertex states with domain-wall boundary and their bijection with ASMs.

Horizontal edge ``h[i][j]`` (row ``i`` in 1..n, slot ``j`` in 0..n) sits
between columns ``j`` and ``j+1``; vertical edge ``v[i][j]`` (slot ``i`` in
0..n, column ``j`` in 1..n) sits between rows ``i`` and ``i+1``.  Python
lists are indexed ``h[i-1][j]`` and ``v[i][j-1]``.

Under the bijection a horizontal arrow points right exactly when the row
partial sum to its left is 0, and a vertical arrow points up exactly when the
column partial sum above it is 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .asm import Asm, ParabolicMask
from .errors import InvariantViolation, SizeMismatch

RIGHT, LEFT, UP, DOWN = "R", "L", "U", "D"


@dataclass(frozen=True)
class SixVertexState:
    h: tuple[tuple[str, ...], ...]
    v: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        h = tuple(tuple(r) for r in self.h)
        v = tuple(tuple(r) for r in self.v)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "v", v)
        n = len(h)
        if n == 0 or len(v) != n + 1:
            raise InvariantViolation("need n rows of horizontal edges and n+1 vertical slots")
        if any(len(r) != n + 1 for r in h) or any(len(r) != n for r in v):
            raise InvariantViolation("edge arrays have the wrong shape")
        if any(x not in (RIGHT, LEFT) for r in h for x in r):
            raise InvariantViolation("horizontal edges must be 'R' or 'L'")
        if any(x not in (UP, DOWN) for r in v for x in r):
            raise InvariantViolation("vertical edges must be 'U' or 'D'")
        for i in range(n):
            if h[i][0] != RIGHT or h[i][n] != LEFT:
                raise InvariantViolation(f"row {i + 1} breaks the domain-wall boundary")
        for j in range(n):
            if v[0][j] != UP or v[n][j] != DOWN:
                raise InvariantViolation(f"column {j + 1} breaks the domain-wall boundary")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if self.incoming(i, j) != 2:
                    raise InvariantViolation(f"ice rule fails at vertex ({i},{j})")

    @property
    def n(self) -> int:
        return len(self.h)

    def incoming(self, i: int, j: int) -> int:
        """Number of arrows pointing into vertex ``(i, j)``."""
        return ((self.h[i - 1][j - 1] == RIGHT) + (self.h[i - 1][j] == LEFT)
                + (self.v[i - 1][j - 1] == DOWN) + (self.v[i][j - 1] == UP))

    def vertex_weight(self, i: int, j: int) -> int:
        """ASM entry read off vertex ``(i, j)``: both horizontals in gives 1,
        both out gives -1, otherwise 0."""
        left, right = self.h[i - 1][j - 1], self.h[i - 1][j]
        if left == RIGHT and right == LEFT:
            return 1
        if left == LEFT and right == RIGHT:
            return -1
        return 0

    def to_dict(self) -> dict:
        return {"n": self.n, "h": [list(r) for r in self.h], "v": [list(r) for r in self.v]}

    @classmethod
    def from_dict(cls, doc: dict) -> SixVertexState:
        S = cls(tuple(tuple(r) for r in doc["h"]), tuple(tuple(r) for r in doc["v"]))
        if "n" in doc and doc["n"] != S.n:
            raise SizeMismatch(f"declared n={doc['n']} but state has {S.n} rows")
        return S


def asm_to_state(A: Asm) -> SixVertexState:
    n = A.n
    h = []
    for row in A.rows:
        acc, slots = 0, [RIGHT]
        for x in row:
            acc += x
            slots.append(RIGHT if acc == 0 else LEFT)
        h.append(tuple(slots))
    v = [(UP,) * n]
    col = [0] * n
    for row in A.rows:
        for j in range(n):
            col[j] += row[j]
        v.append(tuple(UP if c == 0 else DOWN for c in col))
    return SixVertexState(tuple(h), tuple(v))


def state_to_asm(S: SixVertexState) -> Asm:
    n = S.n
    A = Asm(tuple(tuple(S.vertex_weight(i, j) for j in range(1, n + 1)) for i in range(1, n + 1)))
    if asm_to_state(A) != S:
        raise InvariantViolation("state does not correspond to an ASM")
    return A


def in_st_i(S: SixVertexState, I: ParabolicMask) -> bool:
    if S.n != I.n:
        raise SizeMismatch(f"state has n={S.n} but mask is for n={I.n}")
    return all(S.h[i][j] == RIGHT
               for i in I.members
               for j in range(S.n + 1)
               if S.h[i - 1][j] == RIGHT)
