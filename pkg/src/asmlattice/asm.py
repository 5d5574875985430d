"""Core value types: alternating sign matrices, corner-sum (rank) matrices,
permutations, monotone triangles and parabolic masks, plus the bijections
among them.

Everything user-facing is 1-based.  Matrices are stored as tuples of row
tuples, so ``rows[i - 1][j - 1]`` is the entry in row ``i``, column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import (
    BadBottomRow,
    EntryOutOfRange,
    InvariantViolation,
    PartialSumViolation,
    ResourceLimit,
    SizeMismatch,
    TotalSumViolation,
)

Matrix = tuple[tuple[int, ...], ...]

DEFAULT_ENUMERATION_CAP = 8


def _freeze(raw: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in raw)


def _check_square(raw: Matrix) -> int:
    n = len(raw)
    if n == 0:
        raise SizeMismatch("matrix must have at least one row")
    for i, row in enumerate(raw, 1):
        if len(row) != n:
            raise SizeMismatch(f"row {i} has length {len(row)}, expected {n}")
    return n


def _check_asm_rows(rows: Matrix) -> None:
    n = _check_square(rows)
    for i in range(n):
        for j in range(n):
            if rows[i][j] not in (-1, 0, 1):
                raise EntryOutOfRange(
                    f"entry ({i + 1},{j + 1}) = {rows[i][j]} is not in {{-1,0,1}}")
    # every partial sum is checked before any total, rows first
    for i in range(n):
        s = 0
        for j in range(n):
            s += rows[i][j]
            if s not in (0, 1):
                raise PartialSumViolation(
                    f"row {i + 1}: partial sum through column {j + 1} is {s}")
    for j in range(n):
        s = 0
        for i in range(n):
            s += rows[i][j]
            if s not in (0, 1):
                raise PartialSumViolation(
                    f"column {j + 1}: partial sum through row {i + 1} is {s}")
    for i in range(n):
        if sum(rows[i]) != 1:
            raise TotalSumViolation(f"row {i + 1} sums to {sum(rows[i])}")
    for j in range(n):
        total = sum(rows[i][j] for i in range(n))
        if total != 1:
            raise TotalSumViolation(f"column {j + 1} sums to {total}")


@dataclass(frozen=True)
class RankMatrix:
    """Corner-sum matrix ``r(i, j)``; ``r(0, j) = r(i, 0) = 0`` are virtual."""

    values: Matrix

    def __post_init__(self):
        values = _freeze(self.values)
        object.__setattr__(self, "values", values)
        n = _check_square(values)
        if values[n - 1][n - 1] != n:
            raise InvariantViolation(f"r({n},{n}) must equal {n}")
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                v = values[i - 1][j - 1]
                if v - self.at(i - 1, j) not in (0, 1):
                    raise InvariantViolation(f"r({i},{j}) - r({i - 1},{j}) not in {{0,1}}")
                if v - self.at(i, j - 1) not in (0, 1):
                    raise InvariantViolation(f"r({i},{j}) - r({i},{j - 1}) not in {{0,1}}")

    @classmethod
    def _trusted(cls, values: Matrix) -> RankMatrix:
        obj = object.__new__(cls)
        object.__setattr__(obj, "values", values)
        return obj

    @property
    def n(self) -> int:
        return len(self.values)

    def at(self, i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        return self.values[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        """Row ``i`` as a tuple over columns 1..n (row 0 is all zeros)."""
        if i == 0:
            return (0,) * self.n
        return self.values[i - 1]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.values]


@dataclass(frozen=True)
class Asm:
    rows: Matrix

    def __post_init__(self):
        rows = _freeze(self.rows)
        object.__setattr__(self, "rows", rows)
        _check_asm_rows(rows)

    @classmethod
    def _trusted(cls, rows: Matrix) -> Asm:
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        return obj

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    @cached_property
    def rank(self) -> RankMatrix:
        n = self.n
        out = []
        prev = [0] * n
        for i in range(n):
            acc = 0
            cur = []
            for j in range(n):
                acc += self.rows[i][j]
                cur.append(prev[j] + acc)
            out.append(tuple(cur))
            prev = cur
        return RankMatrix._trusted(tuple(out))

    def is_permutation_matrix(self) -> bool:
        return all(x >= 0 for row in self.rows for x in row)

    def to_dict(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, doc: dict) -> Asm:
        A = cls(doc["rows"])
        if "n" in doc and doc["n"] != A.n:
            raise SizeMismatch(f"declared n={doc['n']} but matrix is {A.n}x{A.n}")
        return A

    def __str__(self):
        return "\n".join(" ".join(f"{x:2d}" for x in row) for row in self.rows)


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation ``w(1) w(2) ... w(n)``."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if not word or sorted(word) != list(range(1, len(word) + 1)):
            raise InvariantViolation(f"{list(word)} is not a permutation of 1..{len(word)}")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Accept ``"1342"`` (n <= 9), ``"1,3,4,2"`` or ``"1 3 4 2"``."""
        parts = text.replace(",", " ").split()
        if len(parts) == 1:
            return cls(tuple(int(c) for c in parts[0]))
        return cls(tuple(int(t) for t in parts))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(i) = self(other(i))
        if self.n != other.n:
            raise SizeMismatch(f"cannot compose S_{self.n} with S_{other.n}")
        return Permutation(tuple(self.word[k - 1] for k in other.word))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, wi in enumerate(self.word, 1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def __str__(self):
        if self.n <= 9:
            return "".join(str(x) for x in self.word)
        return ",".join(str(x) for x in self.word)

    def to_dict(self) -> dict:
        return {"n": self.n, "word": list(self.word)}

    @classmethod
    def from_dict(cls, doc: dict) -> Permutation:
        w = cls(tuple(doc["word"]))
        if "n" in doc and doc["n"] != w.n:
            raise SizeMismatch(f"declared n={doc['n']} but word has length {w.n}")
        return w


@dataclass(frozen=True)
class MonotoneTriangle:
    rows: tuple[tuple[int, ...], ...]
    bound: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for i, row in enumerate(rows, 1):
            if len(row) != i:
                raise InvariantViolation(f"row {i} has length {len(row)}")
            for x in row:
                if not 1 <= x <= self.bound:
                    raise InvariantViolation(f"entry {x} in row {i} outside [1, {self.bound}]")
            for j in range(i - 1):
                if row[j] >= row[j + 1]:
                    raise InvariantViolation(f"row {i} is not strictly increasing")
            if i > 1:
                above = rows[i - 2]
                for j in range(i - 1):
                    if not row[j] <= above[j] <= row[j + 1]:
                        raise InvariantViolation(f"rows {i - 1} and {i} do not interlace")

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_dict(self) -> dict:
        return {"bound": self.bound, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, doc: dict) -> MonotoneTriangle:
        return cls(tuple(tuple(r) for r in doc["rows"]), doc["bound"])

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


@dataclass(frozen=True)
class ParabolicMask:
    """A subset ``I`` of ``[n-1]``, split into maximal runs ``[u_t, v_t]``."""

    n: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        members = tuple(sorted(set(int(x) for x in self.members)))
        object.__setattr__(self, "members", members)
        if self.n < 1:
            raise InvariantViolation("n must be positive")
        for i in members:
            if not 1 <= i <= self.n - 1:
                raise InvariantViolation(f"mask member {i} outside [1, {self.n - 1}]")

    @classmethod
    def parse(cls, n: int, text: str | None) -> ParabolicMask:
        if text is None or not text.strip():
            return cls(n, ())
        return cls(n, tuple(int(t) for t in text.split(",") if t.strip()))

    @classmethod
    def all_masks(cls, n: int) -> Iterator[ParabolicMask]:
        for bits in range(1 << max(n - 1, 0)):
            yield cls(n, tuple(i + 1 for i in range(n - 1) if bits >> i & 1))

    @cached_property
    def runs(self) -> tuple[tuple[int, int], ...]:
        out: list[list[int]] = []
        for i in self.members:
            if out and out[-1][1] == i - 1:
                out[-1][1] = i
            else:
                out.append([i, i])
        return tuple((u, v) for u, v in out)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self):
        return len(self.members)

    def to_dict(self) -> dict:
        return {"n": self.n, "members": list(self.members)}

    @classmethod
    def from_dict(cls, doc: dict) -> ParabolicMask:
        return cls(doc["n"], tuple(doc["members"]))

    def __str__(self):
        return "{" + ",".join(str(i) for i in self.members) + "}"


def validate_asm(raw: Sequence[Sequence[int]]) -> Asm:
    return Asm(_freeze(raw))


def rank_matrix(A: Asm) -> RankMatrix:
    return A.rank


def asm_from_rank_matrix(R: RankMatrix) -> Asm:
    n = R.n
    at = R.at
    rows = tuple(
        tuple(at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1)
              for j in range(1, n + 1))
        for i in range(1, n + 1))
    A = Asm._trusted(rows)
    A.__dict__["rank"] = R
    return A


def asm_from_rank_values(values: Sequence[Sequence[int]]) -> Asm:
    """Validate ``values`` as a corner-sum matrix and invert it."""
    return asm_from_rank_matrix(RankMatrix(_freeze(values)))


def identity_asm(n: int) -> Asm:
    return permutation_to_asm(Permutation.identity(n))


def permutation_to_asm(w: Permutation) -> Asm:
    n = w.n
    return Asm._trusted(tuple(
        tuple(1 if w.word[i] == j + 1 else 0 for j in range(n)) for i in range(n)))


def asm_as_permutation(A: Asm) -> Permutation | None:
    """The permutation with matrix ``A``, or ``None`` when ``A`` has a -1."""
    if not A.is_permutation_matrix():
        return None
    return Permutation(tuple(row.index(1) + 1 for row in A.rows))


def asm_to_monotone_triangle(A: Asm) -> MonotoneTriangle:
    n = A.n
    col = [0] * n
    rows = []
    for i in range(n):
        for j in range(n):
            col[j] += A.rows[i][j]
        rows.append(tuple(j + 1 for j in range(n) if col[j] == 1))
    return MonotoneTriangle(tuple(rows), n)


def monotone_triangle_to_asm(T: MonotoneTriangle) -> Asm:
    n = T.size
    if n == 0 or T.rows[-1] != tuple(range(1, n + 1)):
        raise BadBottomRow(f"bottom row must be (1,...,{n})")
    if T.bound != n:
        raise InvariantViolation(f"bound {T.bound} does not match size {n}")
    return _asm_from_triangle_rows(T.rows, n)


def _asm_from_triangle_rows(rows: Sequence[Sequence[int]], n: int) -> Asm:
    prev = [0] * n
    out = []
    for row in rows:
        cur = [0] * n
        for c in row:
            cur[c - 1] = 1
        out.append(tuple(cur[j] - prev[j] for j in range(n)))
        prev = cur
    return Asm._trusted(tuple(out))


def asm_count(n: int) -> int:
    """The product formula ``prod_{j<n} (3j+1)! / (n+j)!``."""
    num = prod(factorial(3 * j + 1) for j in range(n))
    den = prod(factorial(n + j) for j in range(n))
    assert num % den == 0
    return num // den


def interlacing_rows_below(row: Sequence[int], bound: int) -> Iterator[tuple[int, ...]]:
    """Strictly increasing rows of length ``len(row) + 1`` in ``[1, bound]``
    interlacing ``row`` from below, in lexicographic order."""
    m = len(row)

    def rec(j: int, lo: int, acc: tuple[int, ...]):
        # choose entry j (0-based) in [lo, hi]
        hi = row[j] if j < m else bound
        for x in range(lo, hi + 1):
            nxt = acc + (x,)
            if j == m:
                yield nxt
            else:
                yield from rec(j + 1, max(row[j], x + 1), nxt)

    yield from rec(0, 1, ())


def iter_monotone_triangles(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Monotone triangles with bottom row ``(1..n)``, top row first, in
    lexicographic order of ``(row 1, row 2, ...)``."""

    def rec(rows: tuple[tuple[int, ...], ...]):
        if len(rows) == n:
            yield rows
            return
        for nxt in interlacing_rows_below(rows[-1], n):
            yield from rec(rows + (nxt,))

    for k in range(1, n + 1):
        yield from rec(((k,),))


def enumerate_asms(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Asm]:
    """Every element of ASM(n) exactly once, in canonical order.

    Any strictly increasing row with entries in ``[1, n]`` extends down to
    ``(1..n)``, so rows are chosen top-down with no dead ends.
    """
    if n < 1:
        raise InvariantViolation("n must be positive")
    if n > cap:
        raise ResourceLimit(f"enumerating ASM({n}) exceeds cap {cap}")
    for rows in iter_monotone_triangles(n):
        yield _asm_from_triangle_rows(rows, n)


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for p in permutations(range(1, n + 1)):
        yield Permutation(p)
