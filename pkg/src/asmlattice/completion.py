"""Finite posets, Dedekind-MacNeille completion by cut closure, density
checks and order-isomorphism testing.

Relations are stored as bitmasks: ``below[i]`` has bit ``j`` set iff
``elements[j] <= elements[i]``.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Hashable, Iterable, Sequence

from .errors import InvariantViolation, NotALattice, ResourceLimit

DEFAULT_CAP = 5000


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    def __init__(self, elements: Sequence[Hashable], below: Sequence[int], check: bool = True):
        self.elements = list(elements)
        self.below = list(below)
        m = len(self.elements)
        if len(self.below) != m:
            raise InvariantViolation("relation size does not match element count")
        self.above = [0] * m
        for i, mask in enumerate(self.below):
            for j in _bits(mask):
                self.above[j] |= 1 << i
        self.index = {x: i for i, x in enumerate(self.elements)}
        if check:
            self.validate()

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable],
                      leq: Callable[[Hashable, Hashable], bool]) -> FinitePoset:
        below = [sum(1 << j for j, y in enumerate(elements) if leq(y, x)) for x in elements]
        return cls(elements, below)

    @classmethod
    def from_pairs(cls, elements: Sequence[Hashable], pairs: Iterable[tuple[int, int]]) -> FinitePoset:
        """Build from index pairs ``(a, b)`` meaning ``a <= b``; closes reflexively
        and transitively, then validates antisymmetry."""
        m = len(elements)
        below = [1 << i for i in range(m)]
        for a, b in pairs:
            below[b] |= 1 << a
        changed = True
        while changed:
            changed = False
            for i in range(m):
                acc = below[i]
                for j in _bits(below[i]):
                    acc |= below[j]
                if acc != below[i]:
                    below[i] = acc
                    changed = True
        return cls(elements, below)

    def validate(self) -> None:
        for i, mask in enumerate(self.below):
            if not mask >> i & 1:
                raise InvariantViolation(f"relation is not reflexive at {self.elements[i]!r}")
            for j in _bits(mask):
                if j != i and self.below[j] >> i & 1:
                    raise InvariantViolation(
                        f"antisymmetry fails for {self.elements[i]!r}, {self.elements[j]!r}")
                if self.below[j] & ~mask:
                    raise InvariantViolation(f"transitivity fails below {self.elements[i]!r}")

    def __len__(self):
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def lower_covers(self, i: int) -> list[int]:
        strict = self.below[i] & ~(1 << i)
        redundant = 0
        for j in _bits(strict):
            redundant |= self.below[j] & ~(1 << j)
        return list(_bits(strict & ~redundant))

    def upper_covers(self, i: int) -> list[int]:
        strict = self.above[i] & ~(1 << i)
        redundant = 0
        for j in _bits(strict):
            redundant |= self.above[j] & ~(1 << j)
        return list(_bits(strict & ~redundant))

    def covers(self) -> list[tuple[int, int]]:
        return [(j, i) for i in range(len(self)) for j in self.lower_covers(i)]

    def relation_count(self) -> int:
        return sum(m.bit_count() for m in self.below)

    def full_mask(self) -> int:
        return (1 << len(self)) - 1

    def upper_bounds(self, mask: int) -> int:
        acc = self.full_mask()
        for j in _bits(mask):
            acc &= self.above[j]
        return acc

    def lower_bounds(self, mask: int) -> int:
        acc = self.full_mask()
        for j in _bits(mask):
            acc &= self.below[j]
        return acc

    def join_of(self, mask: int) -> int | None:
        """Least upper bound of a set of indices, or ``None``."""
        ub = self.upper_bounds(mask)
        for z in _bits(ub):
            if self.above[z] == ub:
                return z
        return None

    def meet_of(self, mask: int) -> int | None:
        lb = self.lower_bounds(mask)
        for z in _bits(lb):
            if self.below[z] == lb:
                return z
        return None

    def to_dict(self) -> dict:
        pairs = [[j, i] for i in range(len(self)) for j in _bits(self.below[i]) if j != i]
        return {"elements": [str(x) for x in self.elements], "leq_pairs": pairs}

    @classmethod
    def from_dict(cls, doc: dict) -> FinitePoset:
        return cls.from_pairs(doc["elements"], [tuple(p) for p in doc["leq_pairs"]])


def is_lattice(P: FinitePoset) -> bool:
    m = len(P)
    if m == 0:
        return False
    for a in range(m):
        for b in range(a + 1, m):
            pair = (1 << a) | (1 << b)
            if P.join_of(pair) is None or P.meet_of(pair) is None:
                return False
    return True


def dm_completion(P: FinitePoset, cap: int = DEFAULT_CAP) -> tuple[FinitePoset, dict[int, int]]:
    """Lattice of cuts of ``P`` ordered by inclusion.

    Cuts are the intersections of principal down-sets, together with the
    whole carrier (the empty intersection).  Elements of the result are
    frozensets of ``P``-labels; ``embed`` maps a ``P`` index to the index of
    its principal down-set.
    """
    if len(P) > cap:
        raise ResourceLimit(f"poset of size {len(P)} exceeds cap {cap}")
    generators = list(dict.fromkeys(P.below))
    full = P.full_mask()
    seen = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for X in frontier:
            for g in generators:
                Y = X & g
                if Y not in seen:
                    seen.add(Y)
                    nxt.append(Y)
        frontier = nxt
        if len(seen) > cap:
            raise ResourceLimit(f"completion exceeds cap {cap}")
    cuts = sorted(seen, key=lambda c: (c.bit_count(), c))
    pos = {c: k for k, c in enumerate(cuts)}
    below = []
    for c in cuts:
        mask = 0
        for k, d in enumerate(cuts):
            if d & c == d:
                mask |= 1 << k
        below.append(mask)
    labels = [frozenset(P.elements[j] for j in _bits(c)) for c in cuts]
    L = FinitePoset(labels, below, check=False)
    L.masks = cuts
    embed = {i: pos[P.below[i]] for i in range(len(P))}
    return L, embed


def is_cut(P: FinitePoset, mask: int) -> bool:
    """``A^{ul} == A``."""
    return P.lower_bounds(P.upper_bounds(mask)) == mask


def _require_lattice(L: FinitePoset) -> None:
    if not is_lattice(L):
        raise NotALattice("density is only defined inside a lattice")


def is_join_dense(image: Iterable[int], L: FinitePoset) -> bool:
    _require_lattice(L)
    img = sum(1 << i for i in set(image))
    return all(L.join_of(L.below[x] & img) == x for x in range(len(L)))


def is_meet_dense(image: Iterable[int], L: FinitePoset) -> bool:
    _require_lattice(L)
    img = sum(1 << i for i in set(image))
    return all(L.meet_of(L.above[x] & img) == x for x in range(len(L)))


def _refine_colors(posets: Sequence[FinitePoset]) -> list[list[int]]:
    """Joint colour refinement on the cover graphs of several posets."""
    lower = [[P.lower_covers(i) for i in range(len(P))] for P in posets]
    upper = [[P.upper_covers(i) for i in range(len(P))] for P in posets]
    raw = [[(P.below[i].bit_count(), P.above[i].bit_count(), len(lo[i]), len(up[i]))
            for i in range(len(P))]
           for P, lo, up in zip(posets, lower, upper)]
    palette = {c: k for k, c in enumerate(sorted({c for cs in raw for c in cs}))}
    colors = [[palette[c] for c in cs] for cs in raw]
    classes = len(palette)
    while True:
        raw = [[(cs[i], tuple(sorted(cs[j] for j in lo[i])), tuple(sorted(cs[j] for j in up[i])))
                for i in range(len(cs))]
               for cs, lo, up in zip(colors, lower, upper)]
        palette = {c: k for k, c in enumerate(sorted({c for r in raw for c in r}))}
        colors = [[palette[c] for c in r] for r in raw]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def find_isomorphism(P: FinitePoset, Q: FinitePoset, cap: int = DEFAULT_CAP) -> list[int] | None:
    """An order isomorphism ``f`` (as ``f[i]`` = index in ``Q``), or ``None``."""
    if max(len(P), len(Q)) > cap:
        raise ResourceLimit(f"isomorphism test capped at {cap} elements")
    if len(P) != len(Q) or P.relation_count() != Q.relation_count():
        return None
    m = len(P)
    if m == 0:
        return []
    cp, cq = _refine_colors([P, Q])
    if Counter(cp) != Counter(cq):
        return None
    by_color: dict[int, list[int]] = {}
    for y, c in enumerate(cq):
        by_color.setdefault(c, []).append(y)

    # linear extension of P; each non-minimal element is visited after a lower cover
    order = sorted(range(m), key=lambda i: (P.below[i].bit_count(), i))
    anchor = {}
    for i in order:
        lo = P.lower_covers(i)
        anchor[i] = lo[0] if lo else None
    f = [-1] * m
    used = [False] * m
    mapped: list[int] = []

    def consistent(x: int, y: int) -> bool:
        for x2 in mapped:
            y2 = f[x2]
            if P.leq(x2, x) != Q.leq(y2, y) or P.leq(x, x2) != Q.leq(y, y2):
                return False
        return True

    def candidates(x: int) -> list[int]:
        a = anchor[x]
        pool = by_color[cp[x]]
        if a is None:
            return pool
        ups = set(Q.upper_covers(f[a]))
        return [y for y in pool if y in ups]

    def search(k: int) -> bool:
        if k == m:
            return True
        x = order[k]
        for y in candidates(x):
            if used[y] or not consistent(x, y):
                continue
            f[x] = y
            used[y] = True
            mapped.append(x)
            if search(k + 1):
                return True
            mapped.pop()
            used[y] = False
            f[x] = -1
        return False

    import sys

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, m + 1000))
    try:
        found = search(0)
    finally:
        sys.setrecursionlimit(limit)
    return list(f) if found else None


def poset_isomorphic(P: FinitePoset, Q: FinitePoset, cap: int = DEFAULT_CAP) -> bool:
    return find_isomorphism(P, Q, cap) is not None


def is_isomorphism(P: FinitePoset, Q: FinitePoset, f: Sequence[int]) -> bool:
    m = len(P)
    if len(Q) != m or sorted(f) != list(range(m)):
        return False
    return all(P.leq(a, b) == Q.leq(f[a], f[b]) for a in range(m) for b in range(m))
