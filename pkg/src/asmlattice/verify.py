"""Exhaustive verification suites behind ``asmlattice verify``.

Each suite yields :class:`Check` records; a failing record carries a small
witness (the offending matrices, mask and coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from random import Random
from typing import Callable, Iterator

from .asm import (
    Asm,
    ParabolicMask,
    asm_count,
    enumerate_asms,
    permutation_to_asm,
)
from .bruhat import bruhat_leq, join_all
from .completion import (
    FinitePoset,
    dm_completion,
    find_isomorphism,
    is_isomorphism,
    is_join_dense,
    is_meet_dense,
)
from .enumeration import count_tail_family, tail_closed_form, tail_mask
from .parabolic import (
    canonical_p_decomposition,
    canonical_q_decomposition,
    enumerate_asm_i,
    in_asm_i,
    join_I,
    meet_I,
    meet_I_all,
    quotient,
)
from .pi import pi_i, pi_i_definitional, pi_parabolic, pi_word
from .sixvertex import asm_to_state, in_st_i, state_to_asm

EXHAUSTIVE_PAIRS = 20000
SAMPLED_PAIRS = 400

SUITE_CAPS = {
    "main-theorem": 5,
    "meet-formula": 5,
    "decomposition": 5,
    "pi": 5,
    "sixvertex": 6,
    "counts": 7,
}


@dataclass
class Check:
    suite: str
    instance: str
    passed: bool
    witness: dict | None = field(default=None)

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "instance": self.instance, "pass": self.passed}
        if not self.passed and self.witness is not None:
            out["witness"] = self.witness
        return out


def _masks(n: int) -> Iterator[ParabolicMask]:
    return ParabolicMask.all_masks(n)


def main_theorem_instance(n: int, I: ParabolicMask) -> tuple[bool, dict]:
    """Completion of S_n^I against ASM^I(n): isomorphism, an explicit natural
    witness, and join/meet density of the permutations."""
    perms = quotient(I)
    perm_mats = [permutation_to_asm(w) for w in perms]
    P = FinitePoset.from_relation(perm_mats, bruhat_leq)
    L, _ = dm_completion(P)
    members = list(enumerate_asm_i(n, I))
    Q = FinitePoset.from_relation(members, bruhat_leq)
    f = find_isomorphism(L, Q)
    info = {"n": n, "mask": list(I.members), "completion_size": len(L),
            "asm_i_size": len(Q), "relations": [L.relation_count(), Q.relation_count()]}
    if f is None or not is_isomorphism(L, Q, f):
        info["reason"] = "no order isomorphism found"
        return False, info
    # natural witness: A -> {w in S_n^I : w <= A} must hit every cut exactly once
    cut_of = {frozenset(W for W in perm_mats if bruhat_leq(W, A)): A for A in members}
    if len(cut_of) != len(members) or set(cut_of) != set(L.elements):
        info["reason"] = "natural map A -> down-set of permutations is not onto the cuts"
        return False, info
    image = [Q.index[W] for W in perm_mats]
    if not (is_join_dense(image, Q) and is_meet_dense(image, Q)):
        info["reason"] = "permutations are not join- and meet-dense"
        return False, info
    return True, info


def suite_main_theorem(max_n: int, rng: Random) -> Iterator[Check]:
    for n in range(2, max_n + 1):
        for I in _masks(n):
            ok, info = main_theorem_instance(n, I)
            yield Check("main-theorem", f"n={n} I={I}", ok, info)


def _glb_in(items: list[Asm], A: Asm, B: Asm) -> Asm | None:
    lows = [X for X in items if bruhat_leq(X, A) and bruhat_leq(X, B)]
    tops = [X for X in lows if all(bruhat_leq(Y, X) for Y in lows)]
    return tops[0] if len(tops) == 1 else None


def suite_meet_formula(max_n: int, rng: Random) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for I in _masks(n):
            members = list(enumerate_asm_i(n, I))
            mset = set(members)
            if len(members) ** 2 <= EXHAUSTIVE_PAIRS:
                pairs = list(combinations(members, 2)) + [(A, A) for A in members]
                label = "exhaustive"
            else:
                pairs = [(rng.choice(members), rng.choice(members)) for _ in range(SAMPLED_PAIRS)]
                label = f"{SAMPLED_PAIRS} sampled pairs"
            bad = None
            for A, B in pairs:
                C = meet_I(A, B, I)
                if C != _glb_in(members, A, B):
                    bad = {"A": A.to_dict(), "B": B.to_dict(), "meet_I": C.to_dict()}
                    break
                if join_I(A, B, I) not in mset:
                    bad = {"A": A.to_dict(), "B": B.to_dict(), "reason": "join left ASM^I"}
                    break
            yield Check("meet-formula", f"n={n} I={I} ({label})", bad is None, bad)


def suite_decomposition(max_n: int, rng: Random) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for I in _masks(n):
            bad = None
            for A in enumerate_asm_i(n, I):
                ps = [permutation_to_asm(w) for w in canonical_p_decomposition(A, I)]
                qs = [permutation_to_asm(w) for w in canonical_q_decomposition(A, I)]
                if join_all(ps) != A or meet_I_all(qs, I) != A:
                    bad = {"A": A.to_dict(), "mask": list(I.members)}
                    break
            yield Check("decomposition", f"n={n} I={I}", bad is None, bad)


def suite_pi(max_n: int, rng: Random) -> Iterator[Check]:
    for n in range(2, max_n + 1):
        U = list(enumerate_asms(n))
        bad = None
        for A in U:
            for i in range(1, n):
                B = pi_i(A, i)
                if B != pi_i_definitional(A, i, U):
                    bad = {"A": A.to_dict(), "i": i, "reason": "closed form differs from fiber minimum"}
                elif pi_i(B, i) != B:
                    bad = {"A": A.to_dict(), "i": i, "reason": "not idempotent"}
                elif i + 1 < n and pi_word(A, [i, i + 1, i]) != pi_word(A, [i + 1, i, i + 1]):
                    bad = {"A": A.to_dict(), "i": i, "reason": "braid relation"}
                if bad:
                    break
            for i, j in combinations(range(1, n), 2):
                if j - i > 1 and pi_word(A, [i, j]) != pi_word(A, [j, i]):
                    bad = {"A": A.to_dict(), "i": i, "j": j, "reason": "commutation"}
            if bad:
                break
        yield Check("pi", f"n={n} relations", bad is None, bad)
        for I in _masks(n):
            members = set(enumerate_asm_i(n, I))
            image = {pi_parabolic(A, I) for A in U}
            fixed = all(pi_parabolic(A, I) == A for A in members)
            ok = image == members and fixed
            yield Check("pi", f"n={n} I={I} image", ok,
                        None if ok else {"image_size": len(image), "asm_i_size": len(members)})


def suite_sixvertex(max_n: int, rng: Random) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        U = list(enumerate_asms(n))
        states = [asm_to_state(A) for A in U]
        ok = all(state_to_asm(S) == A for S, A in zip(states, U)) and len(set(states)) == len(U)
        yield Check("sixvertex", f"n={n} bijection", ok)
        for I in _masks(n):
            bad = next(({"A": A.to_dict(), "mask": list(I.members)}
                        for A, S in zip(U, states) if in_st_i(S, I) != in_asm_i(A, I)), None)
            yield Check("sixvertex", f"n={n} I={I} St_I", bad is None, bad)


def suite_counts(max_n: int, rng: Random) -> Iterator[Check]:
    for n in range(1, min(max_n, SUITE_CAPS["counts"]) + 1):
        got = sum(1 for _ in enumerate_asms(n))
        yield Check("counts", f"|ASM({n})|", got == asm_count(n),
                    {"enumerated": got, "formula": asm_count(n)})
    for t in (3, 4):
        for n in range(t + 1, max(max_n, t + 1) + 1):
            got = count_tail_family(t, n, check_closed_form=False)
            closed = tail_closed_form(t, n)
            ok = got == closed
            if ok and n <= 5:
                ok = got == sum(1 for _ in enumerate_asm_i(n, tail_mask(t, n)))
            yield Check("counts", f"t={t} n={n}", ok, {"summed": got, "closed_form": closed})


SUITES: dict[str, Callable[[int, Random], Iterator[Check]]] = {
    "main-theorem": suite_main_theorem,
    "meet-formula": suite_meet_formula,
    "pi": suite_pi,
    "sixvertex": suite_sixvertex,
    "counts": suite_counts,
    "decomposition": suite_decomposition,
}


def run(suite: str, max_n: int, seed: int = 0) -> Iterator[Check]:
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        n = min(max_n, SUITE_CAPS[name])
        yield from SUITES[name](n, Random(seed))
