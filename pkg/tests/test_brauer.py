"""Induction decompositions, restriction trichotomy, and certificates.

Frozen decompositions were verified by hand against the classical
induced-character values for the order-6 group (each equality is also
re-checked exactly in-test by summing the induced characters).
"""

import pytest
from repdesc import catalog
from repdesc.brauer import (
    brauer_decompose,
    clifford_trichotomy,
    devissage,
    isaacs_reduce,
    verify_certificate,
)
from repdesc.cyclo import CycNum
from repdesc.errors import HypothesisViolation, NotIrreducible
from repdesc.linalg import Mat
from repdesc.rep import (
    MatrixRep,
    char_table,
    character_of,
    frobenius_induced_character,
    realize_character,
)

S3 = catalog.GROUPS["s3"]()
D4 = catalog.GROUPS["d4"]()
Q8 = catalog.GROUPS["q8"]()
S4 = catalog.GROUPS["s4"]()
ONE = CycNum.one()
Z4 = CycNum.root_of_unity(4, 1)


def r(x):
    return CycNum.rational(x)


def reassemble(dec, G):
    total = None
    for H, psi, c in dec.terms:
        part = frobenius_induced_character(psi, G)
        scaled = part.__class__(
            G, [v * CycNum.rational(c) for v in part.values]
        )
        total = scaled if total is None else total + scaled
    return total


class TestBrauerDecompose:
    def test_trivial_character_frozen(self):
        dec = brauer_decompose(
            char_table(S3)[0], S3, S3.trivial_subgroup()
        )
        shape = [(H.order, int(psi.values[0].coeffs.get(0, 0)), c)
                 for H, psi, c in dec.terms]
        # one induced line from a reflection pair minus one from rotations
        assert shape == [(2, 1, 1), (3, 1, -1)]

    def test_standard_character_frozen(self):
        dec = brauer_decompose(
            char_table(S3)[2], S3, S3.trivial_subgroup()
        )
        shape = sorted((H.order, c) for H, psi, c in dec.terms)
        assert shape == [(2, 1), (2, 1), (3, -1), (3, -1)]

    def test_exactness_for_all_s3_characters_both_moduli(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        for N in (S3.trivial_subgroup(), a3):
            for chi in char_table(S3):
                dec = brauer_decompose(chi, S3, N)
                assert reassemble(dec, S3) == chi
                assert all(
                    isinstance(c, int) and c != 0
                    for _, _, c in dec.terms
                )

    def test_exactness_for_d4_and_q8(self):
        for G in (D4, Q8):
            N = G.trivial_subgroup()
            for chi in char_table(G):
                dec = brauer_decompose(chi, G, N)
                assert reassemble(dec, G) == chi

    def test_subgroups_are_elementary_for_the_modulus(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        dec = brauer_decompose(char_table(S3)[2], S3, a3)
        assert dec.terms
        for H, _psi, _c in dec.terms:
            # every listed subgroup contains the chosen normal subgroup
            assert a3.elements <= H.elements


class TestTrichotomy:
    def test_case_one_splits_the_rotation_characters(self):
        res = clifford_trichotomy(
            catalog.d4_plane(), D4, D4.full_subgroup(),
            D4.subgroup_generated([(1, 2, 3, 0)]),
        )
        assert res.case_tag == "I"
        assert res.e is None
        assert len(res.constituents) == 2
        vals = [tuple(c.values) for c in res.constituents]
        assert (ONE, Z4, -ONE, -Z4) in vals
        assert (ONE, -Z4, -ONE, Z4) in vals

    def test_case_two_keeps_irreducibility(self):
        a4 = S4.subgroup_generated([(1, 2, 0, 3), (1, 0, 3, 2)])
        res = clifford_trichotomy(
            catalog.s4_std(), S4, S4.full_subgroup(), a4
        )
        assert res.case_tag == "II"
        assert len(res.constituents) == 1
        assert res.constituents[0].values[0] == r(3)

    def test_case_three_ramifies(self):
        z = Q8.subgroup_generated([(1, 0, 3, 2, 5, 4, 7, 6)])
        res = clifford_trichotomy(
            catalog.q8_standard(), Q8, Q8.full_subgroup(), z
        )
        assert res.case_tag == "III"
        assert res.e == 2
        assert tuple(res.constituents[0].values) == (ONE, -ONE)

    def test_case_three_side_identity(self):
        # [K:L] copies of the representation match the induced restriction
        z = Q8.subgroup_generated([(1, 0, 3, 2, 5, 4, 7, 6)])
        pi = catalog.q8_standard()
        index = Q8.order // z.order
        res_char = character_of(pi).restrict_to(z.as_group())
        ind = frobenius_induced_character(res_char, Q8)
        chi = character_of(pi)
        scaled = chi.__class__(
            Q8, [v * CycNum.rational(index) for v in chi.values]
        )
        assert ind == scaled

    def test_invariance_hypothesis_enforced(self):
        c4 = D4.subgroup_generated([(1, 2, 3, 0)])
        z = D4.subgroup_generated([(2, 3, 0, 1)])
        table = char_table(c4.as_group())
        # the rotation line with value z4 is flipped by the reflection
        moving = realize_character(table[2])
        with pytest.raises(HypothesisViolation):
            clifford_trichotomy(moving, D4, c4, z)

    def test_abelian_section_enforced(self):
        with pytest.raises(HypothesisViolation):
            clifford_trichotomy(
                catalog.s4_std(), S4, S4.full_subgroup(),
                S4.trivial_subgroup(),
            )

    def test_irreducibility_enforced(self):
        perm = MatrixRep(S3, [
            Mat([[1 if g[j] == i else 0 for j in range(3)]
                 for i in range(3)])
            for g in S3.generators
        ])
        a3 = S3.subgroup_generated([(1, 2, 0)])
        with pytest.raises(HypothesisViolation):
            clifford_trichotomy(perm, S3, S3.full_subgroup(), a3)

    def test_normality_enforced(self):
        c2 = S3.subgroup_generated([(1, 0, 2)])
        with pytest.raises(HypothesisViolation):
            clifford_trichotomy(
                catalog.std_perm_rep("s3"), S3, S3.full_subgroup(), c2
            )


class TestIsaacsReduce:
    def test_d4_reduces_to_the_rotation_line(self):
        w = isaacs_reduce(
            catalog.d4_plane(), D4, D4.trivial_subgroup()
        )
        assert w.H.order == 4
        assert w.H.generators == ((1, 2, 3, 0),)
        assert w.sigma.rank == 1
        assert tuple(character_of(w.sigma).values) == (ONE, Z4, -ONE, -Z4)
        assert [
            (K.order, L.order, I.order)
            for K, L, _sc, I in w.induction_chain
        ] == [(8, 4, 4)]

    def test_s3_reduces_to_a_rotation_character(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        w = isaacs_reduce(catalog.std_perm_rep("s3"), S3, a3)
        assert w.H.order == 3
        assert len(w.induction_chain) == 1
        assert character_of(w.sigma).values[1] == CycNum.root_of_unity(3, 1)

    def test_already_reduced_input_is_returned_unchanged(self):
        rho = catalog.std_perm_rep("s3")
        w = isaacs_reduce(rho, S3, S3.full_subgroup())
        assert w.H.order == 6
        assert w.induction_chain == []
        assert w.sigma is rho

    def test_induction_identity_holds(self):
        for rho, G, N in (
            (catalog.d4_plane(), D4, D4.trivial_subgroup()),
            (catalog.std_perm_rep("s3"), S3,
             S3.subgroup_generated([(1, 2, 0)])),
        ):
            w = isaacs_reduce(rho, G, N)
            ind = frobenius_induced_character(character_of(w.sigma), G)
            assert ind == character_of(rho)


class TestDevissage:
    def test_s3_certificate_frozen(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        cert = devissage(catalog.std_perm_rep("s3"), S3, a3)
        assert (cert.t, cert.s) == (0, 1)
        H, sigma = cert.pairs[0]
        assert H.order == 3 and sigma.rank == 1
        assert bool(verify_certificate(cert))

    def test_s4_certificate_frozen(self):
        v4 = S4.subgroup_generated([(1, 0, 3, 2), (2, 3, 0, 1)])
        cert = devissage(catalog.s4_two_dim(), S4, v4)
        assert (cert.t, cert.s) == (2, 4)
        assert sorted(H.order for H, _ in cert.pairs) == [8, 8, 12, 12]
        assert all(sigma.rank == 1 for _, sigma in cert.pairs)
        assert bool(verify_certificate(cert))

    def test_q8_certificate_frozen(self):
        z = Q8.subgroup_generated([(1, 0, 3, 2, 5, 4, 7, 6)])
        cert = devissage(catalog.q8_standard(), Q8, z)
        assert (cert.t, cert.s) == (0, 1)
        H, sigma = cert.pairs[0]
        assert H.order == 4 and sigma.rank == 1
        assert tuple(character_of(sigma).values) == (ONE, -ONE, Z4, -Z4)
        assert bool(verify_certificate(cert))

    def test_reducible_input_rejected(self):
        perm = MatrixRep(S3, [
            Mat([[1 if g[j] == i else 0 for j in range(3)]
                 for i in range(3)])
            for g in S3.generators
        ])
        with pytest.raises(NotIrreducible):
            devissage(perm, S3, S3.subgroup_generated([(1, 2, 0)]))

    def test_verification_catches_count_corruption(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        cert = devissage(catalog.std_perm_rep("s3"), S3, a3)
        cert.t, cert.s = cert.s, cert.t
        report = verify_certificate(cert)
        assert not report
        assert any("count" in f for f in report.failures)

    def test_verification_catches_a_tampered_block(self):
        v4 = S4.subgroup_generated([(1, 0, 3, 2), (2, 3, 0, 1)])
        cert = devissage(catalog.s4_two_dim(), S4, v4)
        H0, sigma0 = cert.pairs[0]
        cert.pairs[0] = (cert.pairs[2][0], cert.pairs[2][1])
        report = verify_certificate(cert)
        assert not report
        assert report.failures

    def test_report_is_boolean(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        cert = devissage(catalog.std_perm_rep("s3"), S3, a3)
        report = verify_certificate(cert)
        assert bool(report) is True
        assert report.failures == []
