"""Permutation groups: closure, classes, normal structure, quotients.

Frozen values (orders, class data, subgroup lattices) were derived by an
independent orbit enumeration over tuples; class sizes cross-check
against the counting identity sum(sizes) == order inside each test.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repdesc import catalog
from repdesc.errors import (
    InvalidPermutation,
    NoProperStep,
    NotNormal,
    NotSubgroup,
    OrderBoundExceeded,
    PrimalityViolated,
)
from repdesc.grp import (
    FiniteGroup,
    Subgroup,
    chief_step,
    normal_subgroups_containing,
    perm_inv,
    perm_mul,
    quotient_map,
    resolve_bound,
    validate_perm,
)

S3 = catalog.GROUPS["s3"]()
D4 = catalog.GROUPS["d4"]()
Q8 = catalog.GROUPS["q8"]()


def full(G):
    return G.subgroup_generated(list(G.generators))


def trivial(G):
    return G.subgroup_generated([])


class TestClosure:
    def test_orders(self):
        assert S3.order == 6
        assert D4.order == 8
        assert Q8.order == 8
        assert catalog.symmetric(4).order == 24
        assert catalog.alternating(4).order == 12
        assert catalog.cyclic(12).order == 12

    def test_s3_class_representatives_frozen(self):
        assert S3.class_reps == (
            ((0, 1, 2), 1),
            ((1, 2, 0), 2),
            ((0, 2, 1), 3),
        )
        assert sum(size for _, size in S3.class_reps) == S3.order

    def test_q8_has_five_classes(self):
        sizes = [size for _, size in Q8.class_reps]
        assert sizes == [1, 1, 2, 2, 2]
        assert len(D4.class_reps) == 5

    def test_element_orders(self):
        orders = sorted(S3.element_order(g) for g in S3.elements)
        assert orders == [1, 2, 2, 2, 3, 3]
        center_gen = (1, 0, 3, 2, 5, 4, 7, 6)
        assert Q8.element_order(center_gen) == 2

    def test_abelianness(self):
        assert catalog.cyclic(6).is_abelian()
        assert not S3.is_abelian()
        assert not Q8.is_abelian()


class TestSubgroups:
    def test_generated_subgroup_closure(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        assert a3.order == 3
        assert a3.elements == frozenset(
            {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
        )

    def test_canonical_generators_are_stable(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        again = Subgroup(S3, a3.elements)
        assert again.generators == a3.generators

    def test_unclosed_element_set_rejected(self):
        with pytest.raises(NotSubgroup):
            Subgroup(S3, [(0, 1, 2), (1, 2, 0)])

    def test_q8_center(self):
        z = Q8.subgroup_generated([(1, 0, 3, 2, 5, 4, 7, 6)])
        assert z.order == 2
        assert z.is_normal_in_parent

    def test_normality_detection(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        c2 = S3.subgroup_generated([(1, 0, 2)])
        assert a3.is_normal_in_parent
        assert not c2.is_normal_in_parent

    def test_normal_lattice_of_s3(self):
        normals = normal_subgroups_containing(S3, trivial(S3))
        assert [H.order for H in normals] == [1, 3, 6]

    def test_normal_lattice_of_d4(self):
        normals = normal_subgroups_containing(D4, trivial(D4))
        assert [H.order for H in normals] == [1, 2, 4, 4, 4, 8]

    def test_normal_lattice_above_a_subgroup(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        normals = normal_subgroups_containing(S3, a3)
        assert [H.order for H in normals] == [3, 6]


class TestQuotients:
    def test_s3_mod_a3(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        Q, images = quotient_map(S3, a3)
        assert Q.order == 2
        # both generators of S3 are odd, so both map onto the flip
        assert all(images[g] == (1, 0) for g in S3.generators)

    def test_quotient_of_nonnormal_rejected(self):
        c2 = S3.subgroup_generated([(1, 0, 2)])
        with pytest.raises(NotNormal):
            quotient_map(S3, c2)

    def test_d4_mod_center_is_klein(self):
        z = D4.subgroup_generated([(2, 3, 0, 1)])
        Q, _ = quotient_map(D4, z)
        assert Q.order == 4
        assert Q.is_abelian()
        assert all(Q.element_order(g) <= 2 for g in Q.elements)


class TestChiefStep:
    def test_s3_step_from_bottom(self):
        L = chief_step(S3, trivial(S3), full(S3))
        assert L.order == 3

    def test_d4_step_prefers_the_rotation_subgroup(self):
        L = chief_step(D4, trivial(D4), full(D4))
        assert L.order == 4
        assert L.generators == ((1, 2, 3, 0),)

    def test_prime_index_enforced(self):
        a5 = catalog.alternating(5)
        with pytest.raises(PrimalityViolated):
            chief_step(a5, trivial(a5), full(a5))

    def test_trivial_interval(self):
        with pytest.raises(NoProperStep):
            chief_step(S3, trivial(S3), trivial(S3))

    def test_step_from_middle(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        L = chief_step(S3, a3, full(S3))
        assert L.elements == a3.elements


class TestValidation:
    def test_validate_perm(self):
        assert validate_perm(3, [1, 2, 0]) == (1, 2, 0)
        with pytest.raises(InvalidPermutation):
            validate_perm(3, [0, 0, 1])
        with pytest.raises(InvalidPermutation):
            validate_perm(3, [0, 1])
        with pytest.raises(InvalidPermutation):
            validate_perm(3, [0, 1, 3])

    def test_order_bound(self):
        with pytest.raises(OrderBoundExceeded):
            FiniteGroup(7, [tuple(range(1, 7)) + (0,),
                            (1, 0) + tuple(range(2, 7))], bound=100)

    def test_bound_resolution(self, monkeypatch):
        monkeypatch.delenv("REPDESC_BOUND", raising=False)
        assert resolve_bound(None) == 1000
        assert resolve_bound(50) == 50
        monkeypatch.setenv("REPDESC_BOUND", "123")
        assert resolve_bound(None) == 123
        assert resolve_bound(7) == 7


_perm5 = st.permutations(list(range(5))).map(tuple)


class TestProperties:
    @given(st.lists(_perm5, min_size=1, max_size=3))
    @settings(max_examples=40, deadline=None)
    def test_generated_set_is_a_group(self, gens):
        G = FiniteGroup(5, gens)
        elems = G.elements
        assert G.identity() in elems
        for a in list(elems)[:12]:
            assert perm_inv(a) in elems
            for b in list(elems)[:12]:
                assert perm_mul(a, b) in elems

    @given(st.lists(_perm5, min_size=1, max_size=3))
    @settings(max_examples=40, deadline=None)
    def test_order_divides_the_full_symmetric_order(self, gens):
        G = FiniteGroup(5, gens)
        assert 120 % G.order == 0

    @given(st.lists(_perm5, min_size=1, max_size=2))
    @settings(max_examples=30, deadline=None)
    def test_class_sizes_partition_the_group(self, gens):
        G = FiniteGroup(5, gens)
        assert sum(size for _, size in G.class_reps) == G.order
        for r, size in G.class_reps:
            assert G.order % size == 0
