"""Rank conditions defining ASM varieties, checked on explicit rational
matrices with exact fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from random import Random
from typing import Sequence

from .asm import Asm, ParabolicMask, Permutation, all_permutations, permutation_to_asm
from .bruhat import bruhat_leq
from .errors import IndexOutOfRange, NotInSublattice, SizeMismatch
from .parabolic import in_asm_i, meet_I_all


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n == 0 or any(len(row) != n for row in entries):
            raise SizeMismatch("rational matrix must be square and non-empty")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_asm(cls, A: Asm) -> RationalMatrix:
        return cls(A.rows)

    @classmethod
    def zero(cls, n: int) -> RationalMatrix:
        return cls(((0,) * n,) * n)

    @classmethod
    def random(cls, n: int, rng: Random, lo: int = -2, hi: int = 2) -> RationalMatrix:
        return cls(tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(n)))

    def to_dict(self) -> dict:
        def enc(x: Fraction):
            return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return {"n": self.n, "entries": [[enc(x) for x in row] for row in self.entries]}

    @classmethod
    def from_dict(cls, doc: dict) -> RationalMatrix:
        return cls(tuple(tuple(Fraction(x) for x in row) for row in doc["entries"]))


def exact_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q by Bareiss elimination on an integer rescaling."""
    mat = []
    for row in rows:
        scale = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        mat.append([int(Fraction(x) * scale) for x in row])
    if not mat or not mat[0]:
        return 0
    m, k = len(mat), len(mat[0])
    rank, prev = 0, 1
    for col in range(k):
        pivot = next((r for r in range(rank, m) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, m):
            f = mat[r][col]
            mat[r] = [(p * mat[r][c] - f * mat[rank][c]) // prev for c in range(k)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def leading_ranks(Z: RationalMatrix) -> list[list[int]]:
    """``out[i-1][j-1] = rk(Z_{[i],[j]})``."""
    n = Z.n
    return [[exact_rank([row[:j] for row in Z.entries[:i]]) for j in range(1, n + 1)]
            for i in range(1, n + 1)]


def _sizes(Z: RationalMatrix, A: Asm) -> None:
    if Z.n != A.n:
        raise SizeMismatch(f"matrix has n={Z.n}, ASM has n={A.n}")


def in_asm_variety(Z: RationalMatrix, A: Asm) -> bool:
    _sizes(Z, A)
    r = A.rank
    ranks = leading_ranks(Z)
    return all(ranks[i][j] <= r.values[i][j] for i in range(A.n) for j in range(A.n))


def in_asm_variety_reduced(Z: RationalMatrix, A: Asm, I: ParabolicMask) -> bool:
    """Same membership test, checking only the rows outside I."""
    _sizes(Z, A)
    if I.n != A.n:
        raise SizeMismatch(f"mask is for n={I.n}")
    if not in_asm_i(A, I):
        raise NotInSublattice(f"matrix is not in ASM^{I}({A.n})")
    r = A.rank
    n = A.n
    rows = [i for i in range(1, n + 1) if i not in I]
    return all(exact_rank([row[:j] for row in Z.entries[:i]]) <= r.at(i, j)
               for i in rows for j in range(1, n + 1))


def column_witness(A: Asm, b: int) -> Permutation:
    """Permutation ``w`` with ``r_w(., b) = r_A(., b)`` and ``r_w <= r_A``.

    Rows where column ``b``'s rank steps up, read bottom to top, get values
    ``1..b``; the remaining rows, bottom to top, get ``b+1..n``.
    """
    n = A.n
    if not 1 <= b <= n:
        raise IndexOutOfRange(f"column {b} outside [1, {n}]")
    r = A.rank
    steps = [r.at(i, b) - r.at(i - 1, b) for i in range(1, n + 1)]
    U = [i for i in range(n, 0, -1) if steps[i - 1] == 1]
    V = [i for i in range(n, 0, -1) if steps[i - 1] == 0]
    word = [0] * n
    for k, u in enumerate(U, 1):
        word[u - 1] = k
    for k, v in enumerate(V, b + 1):
        word[v - 1] = k
    return Permutation(tuple(word))


@dataclass
class UnionReport:
    meet: Asm
    containment: bool
    equality: bool
    missing: list[Permutation] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"meet": self.meet.to_dict(), "containment": self.containment,
                "equality": self.equality, "missing": [str(w) for w in self.missing]}


def meet_corresponds_to_union(items: Sequence[Asm], I: ParabolicMask) -> UnionReport:
    """Compare ``X_A`` for ``A = meet_I(items)`` with the union of the
    ``X_{A_t}`` on permutation-matrix points."""
    for A in items:
        if not in_asm_i(A, I):
            raise NotInSublattice(f"matrix is not in ASM^{I}({A.n})")
    A = meet_I_all(items, I)
    containment, missing = True, []
    for w in all_permutations(A.n):
        W = permutation_to_asm(w)
        in_meet = bruhat_leq(A, W)
        in_union = any(bruhat_leq(B, W) for B in items)
        if in_union and not in_meet:
            containment = False
        if in_meet and not in_union:
            missing.append(w)
    return UnionReport(A, containment, containment and not missing, missing)
