"""Parabolic quotients S_n^I and the sublattice ASM^I(n).

Members of ASM^I(n) are the ASMs whose rank matrix never shows the vertical
pattern ``(k, k, k+1)`` through a row of I.  Joins agree with ASM(n); meets
take the entrywise max outside I and refill each run of I from its two
bounding rows.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Iterator, Sequence

from . import bruhat
from .asm import (
    Asm,
    ParabolicMask,
    Permutation,
    RankMatrix,
    all_permutations,
    asm_from_rank_matrix,
    enumerate_asms,
    permutation_to_asm,
)
from .errors import NotInSublattice, SizeMismatch


def _match(n: int, I: ParabolicMask) -> None:
    if n != I.n:
        raise SizeMismatch(f"object has size {n} but mask is for n={I.n}")


def length(w: Permutation) -> int:
    word = w.word
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def is_minimal_rep(w: Permutation, I: ParabolicMask) -> bool:
    _match(w.n, I)
    return all(w(i) < w(i + 1) for i in I.members)


def position_blocks(I: ParabolicMask) -> list[tuple[int, int]]:
    """Position blocks ``[u_t, v_t + 1]`` permuted by the parabolic subgroup."""
    return [(u, v + 1) for u, v in I.runs]


def parabolic_decompose(w: Permutation, I: ParabolicMask) -> tuple[Permutation, Permutation]:
    """``w = wI * w_I`` with ``wI`` the minimal coset representative."""
    _match(w.n, I)
    word = list(w.word)
    for lo, hi in position_blocks(I):
        word[lo - 1:hi] = sorted(word[lo - 1:hi])
    wI = Permutation(tuple(word))
    return wI, wI.inverse() * w


def minimal_rep(w: Permutation, I: ParabolicMask) -> Permutation:
    return parabolic_decompose(w, I)[0]


def quotient(I: ParabolicMask) -> list[Permutation]:
    """S_n^I in lexicographic order of one-line notation."""
    return [w for w in all_permutations(I.n) if is_minimal_rep(w, I)]


def longest_min_coset_rep(n: int, I: ParabolicMask) -> Permutation:
    _match(n, I)
    return minimal_rep(Permutation(tuple(range(n, 0, -1))), I)


def longest_parabolic_element(n: int, I: ParabolicMask) -> Permutation:
    """Longest element of the subgroup generated by ``s_i``, ``i`` in I:
    reverses every position block."""
    _match(n, I)
    word = list(range(1, n + 1))
    for lo, hi in position_blocks(I):
        word[lo - 1:hi] = reversed(word[lo - 1:hi])
    return Permutation(tuple(word))


def rank_rows_invariant_under_quotient(w: Permutation, I: ParabolicMask) -> bool:
    r = permutation_to_asm(w).rank
    rI = permutation_to_asm(minimal_rep(w, I)).rank
    return all(r.row(i) == rI.row(i) for i in range(1, w.n + 1) if i not in I)


def in_asm_i(A: Asm, I: ParabolicMask) -> bool:
    _match(A.n, I)
    r = A.rank
    for i in I.members:
        above, mid, below = r.row(i - 1), r.row(i), r.row(i + 1)
        for j in range(A.n):
            if above[j] == mid[j] and below[j] == mid[j] + 1:
                return False
    return True


def _run_fill(top: Sequence[int], bottom: Sequence[int], offset: int) -> tuple[int, ...]:
    # row u_t-1+offset inside a run: min(r(v_t+1, j), r(u_t-1, j) + offset)
    return tuple(min(b, t + offset) for t, b in zip(top, bottom))


def in_asm_i_via_run_formula(A: Asm, I: ParabolicMask) -> bool:
    _match(A.n, I)
    r = A.rank
    for u, v in I.runs:
        top, bottom = r.row(u - 1), r.row(v + 1)
        for i in range(u, v + 1):
            if r.row(i) != _run_fill(top, bottom, i - u + 1):
                return False
    return True


def leq_I(A: Asm, B: Asm, I: ParabolicMask) -> bool:
    """Rank comparison restricted to rows outside I."""
    n = bruhat._same_size(A, B)
    _match(n, I)
    ra, rb = A.rank, B.rank
    return all(x >= y
               for i in range(1, n + 1) if i not in I
               for x, y in zip(ra.row(i), rb.row(i)))


def _require_member(A: Asm, I: ParabolicMask) -> None:
    if not in_asm_i(A, I):
        raise NotInSublattice(f"matrix is not in ASM^{I}({A.n}):\n{A}")


def meet_I(A: Asm, B: Asm, I: ParabolicMask) -> Asm:
    n = bruhat._same_size(A, B)
    _match(n, I)
    _require_member(A, I)
    _require_member(B, I)
    ra, rb = A.rank, B.rank
    rows: list[tuple[int, ...] | None] = [None] * (n + 1)
    rows[0] = (0,) * n
    for i in range(1, n + 1):
        if i not in I:
            rows[i] = tuple(max(x, y) for x, y in zip(ra.row(i), rb.row(i)))
    for u, v in I.runs:
        for i in range(u, v + 1):
            rows[i] = _run_fill(rows[u - 1], rows[v + 1], i - u + 1)
    return asm_from_rank_matrix(RankMatrix(tuple(rows[1:])))


def join_I(A: Asm, B: Asm, I: ParabolicMask) -> Asm:
    _match(bruhat._same_size(A, B), I)
    _require_member(A, I)
    _require_member(B, I)
    C = bruhat.join(A, B)
    assert in_asm_i(C, I), "join left ASM^I"
    return C


def meet_I_all(items: Iterable[Asm], I: ParabolicMask) -> Asm:
    return reduce(lambda x, y: meet_I(x, y, I), items)


def join_I_all(items: Iterable[Asm], I: ParabolicMask) -> Asm:
    return reduce(lambda x, y: join_I(x, y, I), items)


def enumerate_asm_i(n: int, I: ParabolicMask, cap: int | None = None) -> Iterator[Asm]:
    _match(n, I)
    source = enumerate_asms(n) if cap is None else enumerate_asms(n, cap)
    return (A for A in source if in_asm_i(A, I))


def _decomposition(A: Asm, I: ParabolicMask, family) -> list[Permutation]:
    _match(A.n, I)
    _require_member(A, I)
    r = A.rank
    n = A.n
    return [minimal_rep(family(n, i, j, r.at(i, j)), I)
            for i in range(1, n + 1) for j in range(1, n + 1)]


def canonical_p_decomposition(A: Asm, I: ParabolicMask) -> list[Permutation]:
    """``[P[i,j,r_A(i,j)]^I for all (i, j)]``; their join is ``A``."""
    return _decomposition(A, I, bruhat.bigrassmannian_p)


def canonical_q_decomposition(A: Asm, I: ParabolicMask) -> list[Permutation]:
    """``[Q[i,j,r_A(i,j)]^I for all (i, j)]``; their ``meet_I`` is ``A``."""
    return _decomposition(A, I, bruhat.bigrassmannian_q)
