"""Bruhat order on ASM(n) via rank matrices, lattice operations, Hasse
covers, and the bigrassmannian families P[a,b,c] / Q[a,b,c]."""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

from .asm import (
    Asm,
    Permutation,
    RankMatrix,
    asm_from_rank_matrix,
    permutation_to_asm,
)
from .errors import IndexOutOfRange, ParameterOutOfRange, ResourceLimit, SizeMismatch

IRREDUCIBILITY_CAP = 5


def _same_size(A: Asm, B: Asm) -> int:
    if A.n != B.n:
        raise SizeMismatch(f"sizes differ: {A.n} vs {B.n}")
    return A.n


def rank_geq(r: RankMatrix, s: RankMatrix) -> bool:
    return all(x >= y for ra, rb in zip(r.values, s.values) for x, y in zip(ra, rb))


def bruhat_leq(A: Asm, B: Asm) -> bool:
    """``A <= B`` iff ``r_A >= r_B`` entrywise."""
    _same_size(A, B)
    return rank_geq(A.rank, B.rank)


def _entrywise(f, A: Asm, B: Asm) -> Asm:
    _same_size(A, B)
    vals = tuple(tuple(f(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(A.rank.values, B.rank.values))
    return asm_from_rank_matrix(RankMatrix._trusted(vals))


def join(A: Asm, B: Asm) -> Asm:
    return _entrywise(min, A, B)


def meet(A: Asm, B: Asm) -> Asm:
    return _entrywise(max, A, B)


def join_all(items: Iterable[Asm]) -> Asm:
    return reduce(join, items)


def meet_all(items: Iterable[Asm]) -> Asm:
    return reduce(meet, items)


def hasse_covers(items: Sequence[Asm]) -> list[tuple[Asm, Asm]]:
    """Cover pairs ``(lower, upper)`` of the Bruhat order restricted to ``items``."""
    items = list(dict.fromkeys(items))
    if not items:
        return []
    n = items[0].n
    for A in items:
        if A.n != n:
            raise SizeMismatch("all matrices must have the same size")
    m = len(items)
    above = [0] * m  # bitmask of strictly greater elements
    for a in range(m):
        ra = items[a].rank
        for b in range(m):
            if a != b and rank_geq(ra, items[b].rank):
                above[a] |= 1 << b
    covers = []
    for a in range(m):
        strict = above[a]
        redundant = 0
        bits = strict
        while bits:
            low = bits & -bits
            redundant |= above[low.bit_length() - 1]
            bits ^= low
        direct = strict & ~redundant
        for b in range(m):
            if direct >> b & 1:
                covers.append((items[a], items[b]))
    return covers


def _check_abc(n: int, a: int, b: int, c: int) -> None:
    if not (1 <= a <= n and 1 <= b <= n):
        raise ParameterOutOfRange(f"a={a}, b={b} must lie in [1, {n}]")
    if not max(0, a + b - n) <= c <= min(a, b):
        raise ParameterOutOfRange(
            f"c={c} outside [{max(0, a + b - n)}, {min(a, b)}] for a={a}, b={b}, n={n}")


def bigrassmannian_p(n: int, a: int, b: int, c: int) -> Permutation:
    _check_abc(n, a, b, c)
    word = []
    for i in range(1, n + 1):
        if i <= c or i > a + b - c:
            word.append(i)
        elif i <= a:
            word.append(b - c + i)
        else:
            word.append(-a + c + i)
    return Permutation(tuple(word))


def bigrassmannian_q(n: int, a: int, b: int, c: int) -> Permutation:
    # third case conditioned on the index i (a < i <= n-b+c); see block picture
    _check_abc(n, a, b, c)
    word = []
    for i in range(1, n + 1):
        if i <= a - c or i > n - b + c:
            word.append(n + 1 - i)
        elif i <= a:
            word.append(a + b - c + 1 - i)
        else:
            word.append(n + c + 1 - i)
    return Permutation(tuple(word))


def valid_abc(n: int) -> Iterable[tuple[int, int, int]]:
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(max(0, a + b - n), min(a, b) + 1):
                yield a, b, c


def rank_at(A: Asm, a: int, b: int) -> int:
    if not (1 <= a <= A.n and 1 <= b <= A.n):
        raise IndexOutOfRange(f"({a},{b}) outside [1,{A.n}]^2")
    return A.rank.at(a, b)


def check_sandwich(M: Asm, a: int, b: int) -> bool:
    """``P[a,b,c] <= M <= Q[a,b,c]`` where ``c = r_M(a, b)``."""
    c = rank_at(M, a, b)
    P = permutation_to_asm(bigrassmannian_p(M.n, a, b, c))
    Q = permutation_to_asm(bigrassmannian_q(M.n, a, b, c))
    return bruhat_leq(P, M) and bruhat_leq(M, Q)


def _check_universe(A: Asm, universe: Sequence[Asm]) -> None:
    if A.n > IRREDUCIBILITY_CAP:
        raise ResourceLimit(f"irreducibility scan capped at n={IRREDUCIBILITY_CAP}")
    if A not in universe:
        raise ValueError("A is not in the supplied universe")


def is_join_irreducible(A: Asm, universe: Sequence[Asm]) -> bool:
    """The bottom element counts as the empty join, hence not irreducible."""
    _check_universe(A, universe)
    below = [B for B in universe if B != A and bruhat_leq(B, A)]
    if not below:
        return False
    return join_all(below) != A


def is_meet_irreducible(A: Asm, universe: Sequence[Asm]) -> bool:
    _check_universe(A, universe)
    above = [B for B in universe if B != A and bruhat_leq(A, B)]
    if not above:
        return False
    return meet_all(above) != A
