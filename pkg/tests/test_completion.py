from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from asmlattice.asm import ParabolicMask, Permutation, permutation_to_asm
from asmlattice.bruhat import bruhat_leq
from asmlattice.completion import (
    FinitePoset,
    dm_completion,
    find_isomorphism,
    is_cut,
    is_isomorphism,
    is_join_dense,
    is_lattice,
    is_meet_dense,
    poset_isomorphic,
)
from asmlattice.errors import InvariantViolation, NotALattice, ResourceLimit
from asmlattice.parabolic import enumerate_asm_i, quotient

M2 = ParabolicMask(4, (2,))


def chain(k):
    return FinitePoset.from_pairs(list(range(k)), [(i, i + 1) for i in range(k - 1)])


def antichain(k):
    return FinitePoset.from_pairs(list(range(k)), [])


def diamond():
    return FinitePoset.from_pairs(["0", "a", "b", "1"], [(0, 1), (0, 2), (1, 3), (2, 3)])


@st.composite
def random_posets(draw, max_size=7):
    m = draw(st.integers(0, max_size))
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m) if draw(st.booleans())]
    return FinitePoset.from_pairs(list(range(m)), pairs)


def brute_cuts(P):
    """All subsets X with lower(upper(X)) == X, by exhaustive search."""
    m = len(P)
    return {mask for mask in range(1 << m) if P.lower_bounds(P.upper_bounds(mask)) == mask}


def brute_isomorphic(P, Q):
    if len(P) != len(Q):
        return False
    m = len(P)
    return any(all(P.leq(i, j) == Q.leq(f[i], f[j]) for i in range(m) for j in range(m))
               for f in permutations(range(m)))


def bruhat_poset(items):
    return FinitePoset.from_relation(items, bruhat_leq)


class TestFinitePoset:
    def test_from_pairs_closes(self):
        P = chain(4)
        assert P.leq(0, 3) and not P.leq(3, 0)
        assert P.relation_count() == 10

    def test_rejects_cycle(self):
        with pytest.raises(InvariantViolation):
            FinitePoset.from_pairs(["a", "b"], [(0, 1), (1, 0)])

    def test_rejects_non_transitive(self):
        with pytest.raises(InvariantViolation):
            FinitePoset(["a", "b", "c"], [0b001, 0b011, 0b110])

    def test_covers(self):
        assert sorted(diamond().covers()) == [(0, 1), (0, 2), (1, 3), (2, 3)]

    def test_json_round_trip(self):
        D = diamond()
        E = FinitePoset.from_dict(D.to_dict())
        assert E.below == D.below and E.elements == D.elements


class TestIsLattice:
    def test_examples(self):
        assert is_lattice(diamond())
        assert not is_lattice(antichain(2))
        assert is_lattice(chain(3))

    def test_asm_i_is_lattice(self):
        assert is_lattice(bruhat_poset(list(enumerate_asm_i(4, M2))))

    def test_quotient_is_not(self):
        P = bruhat_poset([permutation_to_asm(w) for w in quotient(M2)])
        assert not is_lattice(P)
        a = P.index[permutation_to_asm(Permutation.parse("3142"))]
        b = P.index[permutation_to_asm(Permutation.parse("2341"))]
        # 3241 is their join; the lower bounds 1342 and 2143 have no maximum
        assert P.elements[P.join_of((1 << a) | (1 << b))] == permutation_to_asm(Permutation.parse("3241"))
        assert P.meet_of((1 << a) | (1 << b)) is None


class TestCompletion:
    def test_antichain(self):
        L, embed = dm_completion(antichain(2))
        assert len(L) == 4
        assert poset_isomorphic(L, diamond())
        assert sorted(embed) == [0, 1]

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_chain(self, k):
        L, _ = dm_completion(chain(k))
        assert poset_isomorphic(L, chain(k))

    def test_empty(self):
        L, embed = dm_completion(antichain(0))
        assert len(L) == 1 and embed == {}

    def test_small_quotient(self):
        P = bruhat_poset([permutation_to_asm(w) for w in quotient(M2)])
        L, embed = dm_completion(P)
        Q = bruhat_poset(list(enumerate_asm_i(4, M2)))
        assert len(L) == 14
        f = find_isomorphism(L, Q)
        assert f is not None and is_isomorphism(L, Q, f)

    def test_cap(self):
        with pytest.raises(ResourceLimit):
            dm_completion(chain(10), cap=5)

    @settings(max_examples=120, deadline=None)
    @given(random_posets())
    def test_matches_brute_force_cuts(self, P):
        L, embed = dm_completion(P)
        assert set(L.masks) == brute_cuts(P)
        assert is_lattice(L)
        assert all(is_cut(P, mask) for mask in L.masks)
        for i in range(len(P)):
            for j in range(len(P)):
                assert P.leq(i, j) == L.leq(embed[i], embed[j])
        image = list(embed.values())
        assert is_join_dense(image, L) and is_meet_dense(image, L)

    @settings(max_examples=60, deadline=None)
    @given(random_posets(max_size=6))
    def test_idempotent_on_lattices(self, P):
        L, _ = dm_completion(P)
        L2, _ = dm_completion(L)
        assert poset_isomorphic(L, L2)


class TestDensity:
    def test_permutations_dense_in_sublattice(self):
        Q = bruhat_poset(list(enumerate_asm_i(4, M2)))
        image = [Q.index[permutation_to_asm(w)] for w in quotient(M2)]
        assert is_join_dense(image, Q) and is_meet_dense(image, Q)

    def test_lattice_in_itself(self):
        D = diamond()
        assert is_join_dense(range(4), D) and is_meet_dense(range(4), D)

    def test_bottom_only(self):
        assert not is_join_dense([0], chain(2))

    def test_requires_lattice(self):
        with pytest.raises(NotALattice):
            is_join_dense([0], antichain(2))


class TestIsomorphism:
    def test_self(self):
        D = diamond()
        f = find_isomorphism(D, D)
        assert f is not None and is_isomorphism(D, D, f)
        assert is_isomorphism(D, D, list(range(4)))

    def test_diamond_vs_chain(self):
        assert not poset_isomorphic(diamond(), chain(4))
        assert find_isomorphism(diamond(), chain(4)) is None

    @settings(max_examples=150, deadline=None)
    @given(random_posets(max_size=6), random_posets(max_size=6))
    def test_matches_brute_force(self, P, Q):
        assert poset_isomorphic(P, Q) == brute_isomorphic(P, Q)

    @settings(max_examples=80, deadline=None)
    @given(random_posets(max_size=8), st.randoms(use_true_random=False))
    def test_relabelled_copy(self, P, rnd):
        m = len(P)
        perm = list(range(m))
        rnd.shuffle(perm)
        pairs = [(perm[i], perm[j]) for i in range(m) for j in range(m) if i != j and P.leq(i, j)]
        Q = FinitePoset.from_pairs(list(range(m)), pairs)
        f = find_isomorphism(P, Q)
        assert f is not None and is_isomorphism(P, Q, f)
