from itertools import product

import pytest
from hypothesis import given, settings

from thins.enumeration import enumerate_coreflexives, enumerate_pers
from thins.pers import (completion_base, enumerate_per_indexes, find_per_index, is_maximal_per,
                        is_minimal_per, is_per_index, maximal_completion, maximality_condition,
                        thins_per)
from thins.rel import (Carrier, Coreflexive, NotAPerError, Per, Rel, bottom, identity,
                       is_coreflexive, is_equivalence, left_domain, meet, sig, top,
                       transitive_closure)

import oracles
from conftest import pers

A2, A3 = Carrier("A", 2), Carrier("A", 3)
E2 = top(sig(2))


def R(n, *pairs):
    return Rel.from_pairs(sig(n), pairs)


def naive_thins(P, Q):
    """Pointwise reading: P's classes are Q's classes cut down to P's domain,
    and every nonempty Q-class meets P's domain."""
    dom = {a for a, _ in P.pairs()}
    qp, pp = set(Q.pairs()), set(P.pairs())
    restricted = {(a, b) for a, b in qp if a in dom and b in dom}
    qdom = {a for a, _ in qp}
    covered = all(any((a, d) in qp for d in dom) for a in qdom)
    return pp == restricted and covered


class TestThinsExamples:
    def test_reflexive(self):
        for P in enumerate_pers(2):
            assert thins_per(P, P)

    def test_point_thins_full(self):
        assert thins_per(R(2, (0, 0)), E2)

    def test_point_does_not_thin_identity(self):
        assert not thins_per(R(2, (0, 0)), identity(A2))

    def test_rejects_non_pers(self):
        with pytest.raises(NotAPerError):
            thins_per(R(2, (0, 1)), E2)


class TestIndexExamples:
    def test_is_per_index(self):
        assert is_per_index(bottom(sig(2)), bottom(sig(2)))
        assert is_per_index(R(2, (0, 0)), E2)
        assert not is_per_index(identity(A2), E2)

    def test_find_per_index(self):
        assert find_per_index(bottom(sig(2))) == bottom(sig(2))
        assert find_per_index(E2) == R(2, (0, 0))
        P = R(3, (0, 0), (0, 1), (1, 0), (1, 1), (2, 2))
        assert find_per_index(P) == R(3, (0, 0), (2, 2))

    def test_enumerate_per_indexes(self):
        assert enumerate_per_indexes(E2) == [R(2, (0, 0)), R(2, (1, 1))]
        assert enumerate_per_indexes(identity(A2)) == [identity(A2)]
        assert enumerate_per_indexes(bottom(sig(2))) == [bottom(sig(2))]


class TestExtremalExamples:
    U2 = enumerate_pers(2)

    def test_minimal(self):
        assert is_minimal_per(R(2, (0, 0)), self.U2)

    def test_maximal(self):
        assert is_maximal_per(E2, self.U2)
        assert not is_maximal_per(R(2, (0, 0)), self.U2)

    def test_condition(self):
        assert maximality_condition(bottom(sig(2)))
        assert maximality_condition(E2)
        assert not maximality_condition(R(2, (0, 0)))


class TestCompletionExamples:
    def test_bottom(self):
        t = maximal_completion(bottom(sig(3)))
        assert t.q == t.J == t.R == t.Q == bottom(sig(3))

    def test_identity(self):
        t = maximal_completion(identity(A2))
        assert t.q == identity(A2)
        assert t.J == R(2, (0, 0)) and t.R == R(2, (0, 0))
        assert t.Q == identity(A2)

    def test_block_in_three(self):
        t = maximal_completion(R(3, (0, 0), (0, 1), (1, 0), (1, 1)))
        assert t.q == identity(A3)
        assert t.J == R(3, (0, 0), (2, 2))
        assert t.R == R(3, (0, 0), (0, 2), (2, 0), (2, 2))
        assert t.Q == top(sig(3))

    def test_rejects_foreign_index(self):
        with pytest.raises(ValueError):
            maximal_completion(identity(A2), J=identity(A2))


class TestAgainstOracles:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_thins_matches_pointwise_reading(self, n):
        U = enumerate_pers(n)
        for P, Q in product(U, U):
            assert thins_per(P, Q) == naive_thins(P, Q)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_index_enumeration_matches_filter(self, n):
        for P in enumerate_pers(n):
            found = [J for J in enumerate_coreflexives(P.carrier) if is_per_index(J, P)]
            assert set(enumerate_per_indexes(P)) == set(found)
            assert len(found) == len(set(found))
            expected = 1
            for cls in Per.of(P).classes():
                expected *= len(cls)
            assert len(found) == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_maximal_counts(self, n):
        U = enumerate_pers(n)
        assert sum(is_maximal_per(P, U) for P in U) == 1 + oracles.bell(n)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_minimal_are_coreflexives(self, n):
        U = enumerate_pers(n)
        assert {P for P in U if is_minimal_per(P, U)} == {P for P in U if is_coreflexive(P)}


class TestProperties:
    @given(pers(), pers())
    def test_antisymmetry_and_inclusion(self, P, Q):
        if P.sig != Q.sig:
            return
        if thins_per(P, Q):
            assert P <= Q
            assert P == P @ Q @ P and Q == Q @ P @ Q
            if thins_per(Q, P):
                assert P == Q

    @settings(max_examples=300)
    @given(pers(n=4), pers(n=4), pers(n=4))
    def test_transitivity_at_four(self, P, Q, S):
        if thins_per(P, Q) and thins_per(Q, S):
            assert thins_per(P, S)

    @given(pers(), pers())
    def test_coreflexive_thins_iff_index(self, P, Q):
        if P.sig == Q.sig:
            assert (is_coreflexive(P) and thins_per(P, Q)) == is_per_index(P, Q)

    @given(pers())
    def test_find_per_index_is_index_and_thins(self, P):
        J = find_per_index(P)
        assert is_per_index(J, P) and thins_per(J, P)

    @given(pers())
    def test_maximality_condition_characterises(self, P):
        assert maximality_condition(P) == (P.is_empty() or is_equivalence(P))

    @given(pers())
    def test_completion_guarantees(self, P):
        q, base = completion_base(P)
        for J in enumerate_per_indexes(base):
            t = maximal_completion(P, J)
            assert all(t.guarantees().values())
            assert t.Q == transitive_closure(t.P | t.R)

    @given(pers())
    def test_completion_base_domain(self, P):
        q, base = completion_base(P)
        assert left_domain(base) == q
        T = top(P.sig)
        assert q == meet(identity(P.carrier), T @ P @ T)
