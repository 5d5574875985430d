"""The operators pi_i on ASM(n), their words pi_w, and the parabolic
projector pi_I.

``pi_i(A)`` is the Bruhat-minimum of the ASMs whose rank matrix agrees with
``r_A`` off row ``i``.  The fast path rewrites row ``i`` of the rank matrix as
``min(r(i-1, j) + 1, r(i+1, j))``; :func:`pi_i_definitional` is the
brute-force fiber minimum it is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .asm import Asm, ParabolicMask, Permutation, RankMatrix, asm_from_rank_matrix, enumerate_asms
from .bruhat import bruhat_leq, join
from .errors import IndexOutOfRange, ResourceLimit
from .parabolic import length, longest_parabolic_element

IMAGE_CAP = 5


def _check_index(A: Asm, i: int) -> None:
    if not 1 <= i <= A.n - 1:
        raise IndexOutOfRange(f"pi index {i} outside [1, {A.n - 1}]")


def pi_i(A: Asm, i: int) -> Asm:
    _check_index(A, i)
    r = A.rank
    new_row = tuple(min(a + 1, b) for a, b in zip(r.row(i - 1), r.row(i + 1)))
    values = r.values[:i - 1] + (new_row,) + r.values[i:]
    return asm_from_rank_matrix(RankMatrix(values))


def _fiber_minimum(A: Asm, rows: set[int], universe: Iterable[Asm]) -> Asm:
    r = A.rank
    keep = [k for k in range(1, A.n + 1) if k not in rows]
    fiber = [B for B in universe if all(B.rank.row(k) == r.row(k) for k in keep)]
    lows = [B for B in fiber if all(bruhat_leq(B, C) for C in fiber)]
    assert len(lows) == 1, "fiber has no Bruhat minimum"
    return lows[0]


def pi_i_definitional(A: Asm, i: int, universe: Sequence[Asm] | None = None) -> Asm:
    _check_index(A, i)
    if universe is None:
        universe = list(enumerate_asms(A.n))
    return _fiber_minimum(A, {i}, universe)


def pi_word(A: Asm, word: Sequence[int]) -> Asm:
    """Apply ``pi_{word[0]}`` first, then ``pi_{word[1]}``, and so on."""
    for i in word:
        A = pi_i(A, i)
    return A


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word ``[i_1, ..., i_l]`` with ``w = s_{i_1} ... s_{i_l}``,
    found by repeatedly stripping the leftmost right descent."""
    word = list(w.word)
    out: list[int] = []
    while True:
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                out.append(k + 1)
                break
        else:
            break
    out.reverse()
    return out


def pi_perm(A: Asm, w: Permutation) -> Asm:
    """``pi_w = pi_{i_1} o ... o pi_{i_l}`` for a reduced word of ``w``."""
    return pi_word(A, list(reversed(reduced_word(w))))


def pi_parabolic(A: Asm, I: ParabolicMask) -> Asm:
    """Projection onto ASM^I(n): ``pi_w`` for ``w`` the longest element of the
    parabolic subgroup of I.  Frees exactly the rows in I, so it is the
    identity for empty I and collapses to the identity matrix for I = [n-1]."""
    return pi_perm(A, longest_parabolic_element(A.n, I))


def pi_parabolic_definitional(A: Asm, I: ParabolicMask,
                              universe: Sequence[Asm] | None = None) -> Asm:
    if universe is None:
        universe = list(enumerate_asms(A.n))
    return _fiber_minimum(A, set(I.members), universe)


@dataclass
class LatticeReport:
    word: list[int]
    n: int
    image_size: int
    is_lattice: bool
    has_minimum: bool
    counterexample: tuple[Asm, Asm] | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        out = {"word": self.word, "n": self.n, "image_size": self.image_size,
               "is_lattice": self.is_lattice, "has_minimum": self.has_minimum}
        if self.counterexample is not None:
            out["counterexample"] = [X.to_dict() for X in self.counterexample]
        return out


def pi_image_is_lattice(word: Sequence[int], n: int) -> LatticeReport:
    """Check that the image of ``pi_word`` over ASM(n) has a minimum and is
    closed under the ASM(n) join (which then makes it a lattice)."""
    if n > IMAGE_CAP:
        raise ResourceLimit(f"image scan capped at n={IMAGE_CAP}")
    image = list(dict.fromkeys(pi_word(A, word) for A in enumerate_asms(n)))
    members = set(image)
    has_min = any(all(bruhat_leq(X, Y) for Y in image) for X in image)
    for a, X in enumerate(image):
        for Y in image[a + 1:]:
            if join(X, Y) not in members:
                return LatticeReport(list(word), n, len(image), False, has_min, (X, Y))
    return LatticeReport(list(word), n, len(image), has_min, has_min)


def word_length_is_reduced(word: Sequence[int], n: int) -> bool:
    w = Permutation.identity(n)
    for i in word:
        s = list(range(1, n + 1))
        s[i - 1], s[i] = s[i], s[i - 1]
        w = w * Permutation(tuple(s))
    return length(w) == len(word)
