"""Field-of-definition rewriting: witnesses, averaged cocycles, and
summand cancellation.

Frozen witness data and block characters were hand-checked against the
characteristic polynomials of the named class representatives; the
rank-one averaging value is a two-line hand computation (see the test).
"""

from fractions import Fraction

import pytest
from repdesc import catalog
from repdesc.cyclo import (
    CycNum,
    GaloisAut,
    SubfieldSpec,
    in_fixed_field,
)
from repdesc.descent import (
    Cocycle,
    MultOneWitness,
    descend_prop7,
    find_multiplicity_one,
    hilbert90_solve,
    hom_dim_base_change_check,
    intertwiner_cocycle,
    noether_deuring,
)
from repdesc.errors import (
    CharacterMismatch,
    ConstituentMissing,
    EntriesNotInBaseField,
    NotAbsolutelyIrreducible,
    TraceNotRational,
    WitnessInvalid,
)
from repdesc.linalg import Mat
from repdesc.rep import (
    MatrixRep,
    char_table,
    character_of,
    direct_sum_rep,
    hom_space,
    realize_character,
    zero_rep,
)

Q = SubfieldSpec.rationals()
S3 = catalog.GROUPS["s3"]()
ONE = CycNum.one()


def r(x):
    return CycNum.rational(x)


def entries_in(rho, k):
    return all(
        in_fixed_field(x, k)
        for im in rho.gen_images
        for row in im.rows
        for x in row
    )


def perm_rep(G):
    return MatrixRep(G, [
        Mat([[1 if g[j] == i else 0 for j in range(G.degree)]
             for i in range(G.degree)])
        for g in G.generators
    ])


def triv_rep(G):
    return MatrixRep(G, [Mat.identity(1) for _ in G.generators])


class TestWitnessScan:
    def test_transposition_carries_the_witness(self):
        # charpoly at (0,2,1) is (x-1)(x+1): eigenvalue 1 is simple
        w = find_multiplicity_one(catalog.std_perm_rep("s3"), Q)
        assert w == MultOneWitness((0, 2, 1), ONE)

    def test_scan_follows_class_order(self):
        # identity image has (x-1)^2, no simple root, so it is skipped
        w = find_multiplicity_one(catalog.s3_std_cyclotomic(), Q)
        assert w.element == (0, 2, 1)

    def test_no_witness_for_the_ramified_plane(self):
        # all non-central images have conjugate-pair spectra {i,-i} etc.
        assert find_multiplicity_one(catalog.q8_standard(), Q) is None

    def test_larger_base_field_can_unlock_a_witness(self):
        w = find_multiplicity_one(
            catalog.q8_standard(), SubfieldSpec.full_field(4)
        )
        assert w is not None
        assert not in_fixed_field(w.alpha, Q)


class TestDescend:
    def test_cyclotomic_standard_block_becomes_rational(self):
        cyc = catalog.s3_std_cyclotomic()
        assert not entries_in(cyc, Q)
        w = find_multiplicity_one(cyc, Q)
        dw = descend_prop7(cyc, Q, w, seed=0)
        assert entries_in(dw.descended, Q)
        assert character_of(dw.descended) == character_of(cyc)
        for g in S3.elements:
            assert dw.b.inverse() @ cyc.image(g) @ dw.b == \
                dw.descended.image(g)

    def test_descent_is_deterministic(self):
        cyc = catalog.s3_std_cyclotomic()
        w = find_multiplicity_one(cyc, Q)
        first = descend_prop7(cyc, Q, w, seed=0)
        second = descend_prop7(cyc, Q, w, seed=0)
        assert first.b == second.b

    def test_character_outside_base_field_rejected(self):
        a3 = S3.subgroup_generated([(1, 2, 0)]).as_group()
        line = realize_character(char_table(a3)[1])
        w = find_multiplicity_one(line, SubfieldSpec.full_field(3))
        with pytest.raises(TraceNotRational):
            intertwiner_cocycle(line, Q, w)

    def test_wrong_eigenvalue_rejected(self):
        cyc = catalog.s3_std_cyclotomic()
        with pytest.raises(WitnessInvalid):
            descend_prop7(cyc, Q, MultOneWitness((0, 2, 1), r(5)), seed=0)

    def test_reducible_input_rejected(self):
        with pytest.raises(NotAbsolutelyIrreducible):
            descend_prop7(
                perm_rep(S3), Q, MultOneWitness((0, 2, 1), ONE), seed=0
            )


class TestHilbert90:
    def test_rank_one_average_frozen(self):
        # a(sigma) = z4 and C = identity give b = 1*1 + z4*1 = 1 + z4
        stub = catalog.cyclic_char_rep(1, 0)
        f4 = SubfieldSpec.full_field(4)
        sig = GaloisAut(4, 3)
        z4 = CycNum.root_of_unity(4, 1)
        c = Cocycle(
            Q, f4,
            {GaloisAut.identity(4): Mat.identity(1), sig: Mat([[z4]])},
            stub, Mat.identity(1),
        )
        b = hilbert90_solve(c, seed=0)
        assert b == Mat([[ONE + z4]])
        assert b.is_invertible()

    def test_average_splits_the_cocycle(self):
        cyc = catalog.s3_std_cyclotomic()
        w = find_multiplicity_one(cyc, Q)
        coc = intertwiner_cocycle(cyc, Q, w)
        b0 = hilbert90_solve(coc, seed=0)
        from repdesc.cyclo import galois_apply

        for s, a in coc.maps.items():
            twisted = b0.apply_entrywise(lambda v: galois_apply(s, v))
            assert a @ twisted == b0


class TestHomDimComparison:
    def test_agreement_over_the_splitting_field(self):
        std = catalog.std_perm_rep("s3")
        cyc = catalog.s3_std_cyclotomic()
        k = SubfieldSpec.full_field(3)
        assert hom_dim_base_change_check(std, cyc, k) is True
        assert hom_space(std, cyc).dimension == 1

    def test_entries_must_lie_in_the_field(self):
        std = catalog.std_perm_rep("s3")
        cyc = catalog.s3_std_cyclotomic()
        with pytest.raises(EntriesNotInBaseField):
            hom_dim_base_change_check(std, cyc, Q)

    def test_agreement_for_sums(self):
        std = catalog.std_perm_rep("s3")
        sign = catalog.sign_rep(3)
        both = direct_sum_rep([std, sign])
        assert hom_dim_base_change_check(both, both, Q) is True
        assert hom_space(both, both).dimension == 2


class TestNoetherDeuring:
    def test_peel_the_fixed_line_off_the_permutation_rep(self):
        out = noether_deuring(
            catalog.std_perm_rep("s3"), triv_rep(S3), perm_rep(S3), Q
        )
        assert out.rank == 2
        assert tuple(character_of(out).values) == (r(2), -ONE, CycNum.zero())
        assert entries_in(out, Q)

    def test_rotation_plane_of_the_cyclic_regular_rep(self):
        c3 = catalog.cyclic(3)
        rot = Mat([[r(0), r(-1)], [ONE, -ONE]])
        rho2 = MatrixRep(c3, [rot])
        out = noether_deuring(rho2, triv_rep(c3), perm_rep(c3), Q)
        assert out.rank == 2
        assert tuple(character_of(out).values) == (r(2), -ONE, -ONE)
        assert entries_in(out, Q)

    def test_partial_cancellation_inside_one_block(self):
        triv = triv_rep(S3)
        sign = catalog.sign_rep(3)
        plain = direct_sum_rep([triv, triv, sign])
        P = Mat([[ONE, ONE, r(0)], [r(0), ONE, r(2)], [ONE, r(0), ONE]])
        pi0 = MatrixRep(
            S3, [P.inverse() @ im @ P for im in plain.gen_images]
        )
        rho = direct_sum_rep([triv, sign])
        out = noether_deuring(rho, triv, pi0, Q)
        assert out.rank == 2
        assert tuple(character_of(out).values) == (r(2), r(2), CycNum.zero())
        assert entries_in(out, Q)

    def test_zero_cancellation_returns_the_input(self):
        std = catalog.std_perm_rep("s3")
        assert noether_deuring(std, zero_rep(S3), std, Q) is std

    def test_character_bookkeeping_enforced(self):
        with pytest.raises(CharacterMismatch):
            noether_deuring(
                catalog.std_perm_rep("s3"), triv_rep(S3),
                direct_sum_rep([triv_rep(S3), triv_rep(S3)]), Q,
            )

    def test_ramified_block_cannot_be_extracted_rationally(self):
        with pytest.raises(ConstituentMissing):
            noether_deuring(
                catalog.q8_standard(), catalog.q8_standard(),
                catalog.q8_rational4(), Q,
            )

    def test_succeeds_over_the_splitting_field(self):
        f4 = SubfieldSpec.full_field(4)
        out = noether_deuring(
            catalog.q8_standard(), catalog.q8_standard(),
            catalog.q8_rational4(), f4,
        )
        assert out.rank == 2
        assert character_of(out) == character_of(catalog.q8_standard())
        assert entries_in(out, f4)
