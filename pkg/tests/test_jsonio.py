"""Document round trips and strict input rejection."""

from fractions import Fraction

import pytest
from repdesc import catalog, jsonio
from repdesc.cyclo import CycNum, GaloisAut, SubfieldSpec
from repdesc.errors import InputError
from repdesc.grp import Subgroup
from repdesc.linalg import Mat
from repdesc.rep import MatrixRep, character_of, zero_rep

S3 = catalog.GROUPS["s3"]()


class TestRoundTrips:
    def test_cyclotomic_values(self):
        for v in (
            CycNum.zero(),
            CycNum.one(),
            CycNum.rational(Fraction(-7, 3)),
            CycNum.root_of_unity(12, 7) + CycNum.rational(Fraction(3, 2)),
            CycNum.root_of_unity(5, 2) * CycNum.rational(Fraction(1, 4)),
        ):
            assert jsonio.cyc_from_json(jsonio.cyc_to_json(v)) == v

    def test_galois_and_subfield(self):
        s = GaloisAut(12, 7)
        assert jsonio.galois_from_json(jsonio.galois_to_json(s)) == s
        k = SubfieldSpec(5, [1, 4])
        assert jsonio.subfield_from_json(jsonio.subfield_to_json(k)) == k
        q = SubfieldSpec.rationals()
        assert jsonio.subfield_from_json(jsonio.subfield_to_json(q)) == q

    def test_group(self):
        doc = jsonio.group_to_json(S3)
        back = jsonio.group_from_json(doc)
        assert back.same_group(S3)
        assert back.name == S3.name

    def test_subgroup(self):
        a3 = S3.subgroup_generated([(1, 2, 0)])
        back = jsonio.subgroup_from_json(jsonio.subgroup_to_json(a3))
        assert back.elements == a3.elements
        assert back.generators == a3.generators

    def test_matrix(self):
        M = Mat([[CycNum.root_of_unity(4, 1), CycNum.rational(2)],
                 [CycNum.zero(), CycNum.one()]])
        assert jsonio.matrix_from_json(jsonio.matrix_to_json(M)) == M

    def test_representation(self):
        rho = catalog.s3_std_cyclotomic()
        back = jsonio.rep_from_json(jsonio.rep_to_json(rho))
        assert back.group.same_group(S3)
        for g in S3.elements:
            assert back.image(g) == rho.image(g)

    def test_zero_representation(self):
        z = zero_rep(S3)
        back = jsonio.rep_from_json(jsonio.rep_to_json(z))
        assert back.rank == 0

    def test_certificate(self):
        from repdesc.brauer import devissage, verify_certificate

        a3 = S3.subgroup_generated([(1, 2, 0)])
        cert = devissage(catalog.std_perm_rep("s3"), S3, a3)
        doc = jsonio.certificate_to_json(cert)
        back = jsonio.certificate_from_json(doc)
        assert (back.t, back.s) == (cert.t, cert.s)
        assert bool(verify_certificate(back))

    def test_witness(self):
        doc = {"class_rep": [0, 2, 1],
               "alpha": jsonio.cyc_to_json(CycNum.one())}
        w = jsonio.multone_from_json(doc)
        assert w.element == (0, 2, 1)
        assert jsonio.multone_to_json(w) == doc

    def test_harness_report(self):
        from repdesc.cyclo import GaloisAut
        from repdesc.harness import run_harness

        a3 = S3.subgroup_generated([(1, 2, 0)])
        report = run_harness(
            catalog.s3_std_cyclotomic(), S3, a3, GaloisAut(3, 2), seed=0
        )
        doc = jsonio.harness_report_to_json(report)
        assert doc["status"] == "ok"
        assert "failure" not in doc
        assert doc["F"] == jsonio.subfield_to_json(report.F)
        assert len(doc["descents"]) == 1


class TestStrictness:
    def test_unknown_field_rejected(self):
        doc = jsonio.cyc_to_json(CycNum.one())
        doc["extra"] = 1
        with pytest.raises(InputError):
            jsonio.cyc_from_json(doc)

    def test_missing_field_rejected(self):
        with pytest.raises(InputError):
            jsonio.cyc_from_json({"n": 3})

    def test_zero_denominator_rejected(self):
        with pytest.raises(InputError):
            jsonio.cyc_from_json({"n": 1, "terms": [[0, "1/0"]]})

    def test_unsorted_exponents_rejected(self):
        good = {"n": 12, "terms": [[1, "1"], [3, "1"]]}
        assert jsonio.cyc_from_json(good) is not None
        bad = {"n": 12, "terms": [[3, "1"], [1, "1"]]}
        with pytest.raises(InputError):
            jsonio.cyc_from_json(bad)

    def test_exponent_out_of_range_rejected(self):
        with pytest.raises(InputError):
            jsonio.cyc_from_json({"n": 12, "terms": [[12, "1"]]})
        with pytest.raises(InputError):
            jsonio.cyc_from_json({"n": 12, "terms": [[-1, "1"]]})

    def test_non_canonical_input_is_canonicalized(self):
        # exponent 2 at conductor 4 folds to the rational -1
        v = jsonio.cyc_from_json({"n": 4, "terms": [[2, "1"]]})
        assert v == -CycNum.one()

    def test_invalid_permutation_rejected(self):
        doc = jsonio.group_to_json(S3)
        doc["generators"][0] = [0, 0, 1]
        with pytest.raises(InputError):
            jsonio.group_from_json(doc)

    def test_generator_count_mismatch_rejected(self):
        doc = jsonio.rep_to_json(catalog.std_perm_rep("s3"))
        del doc["images"]["1"]
        with pytest.raises(InputError):
            jsonio.rep_from_json(doc)

    def test_relation_violation_rejected(self):
        doc = jsonio.rep_to_json(catalog.std_perm_rep("s3"))
        doc["images"]["0"] = jsonio.matrix_to_json(Mat.identity(2))
        with pytest.raises(InputError):
            jsonio.rep_from_json(doc)

    def test_ragged_matrix_rejected(self):
        with pytest.raises(InputError):
            jsonio.matrix_from_json([[{"n": 1, "terms": []}], []])

    def test_bad_stabilizer_rejected(self):
        doc = jsonio.subfield_to_json(SubfieldSpec(5, [1, 4]))
        doc["stabilizer"] = [2, 5]
        with pytest.raises(InputError):
            jsonio.subfield_from_json(doc)

    def test_order_bound_respected(self):
        doc = jsonio.group_to_json(catalog.symmetric(4))
        with pytest.raises(InputError):
            jsonio.group_from_json(doc, bound=10)
