import pytest
import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from chowmaps.core.exceptions import EvenDegreeError
from chowmaps.algebra.poly_core import ZZ_CHERN
from chowmaps.services.presentation import (
    known_presentation, presentation_document, presentation_equality, presentation_relation_redundant,
    reduced_ideal
)
from chowmaps.relations.catalog import compute_relation_set, reduced_keys

c1, c2 = ZZ_CHERN.gens


class TestPresentation:
    def test_generators(self):
        """r = 2, d = 3 is presented by alpha_{1,0}, alpha_{1,1}, alpha_{2,0}, alpha_{3,0}"""
        report = presentation_document(2, 3)
        assert [g.label for g in report.generators] == ["alpha(1,0)", "alpha(1,1)", "alpha(2,0)", "alpha(3,0)"]
        assert report.generators[0].text == "9c₁² − 27c₂"
        assert report.generators[0].provenance == "genfun"
        assert report.generators[2].provenance == "localization"
        assert report.relations == []

    def test_full(self):
        """--full lists every class after the generators"""
        report = presentation_document(1, 3, full=True)
        assert len(report.relations) == 9
        assert report.relations[-1].label == "alpha(3,3)"
        assert [g.label for g in report.generators] == ["alpha(1,0)", "alpha(1,1)", "alpha(2,0)", "alpha(3,0)"]

    def test_thread_independent(self):
        """The document is the same on any number of threads"""
        assert presentation_document(2, 5, threads=1) == presentation_document(2, 5, threads=4)

    def test_even_degree(self):
        """Even d is rejected"""
        with pytest.raises(EvenDegreeError):
            presentation_document(1, 4)


class TestReducedIdeal:
    def test_labels(self):
        """Labels follow the reduced keys"""
        ideal = reduced_ideal(compute_relation_set(1, 5, reduced_keys(5)))
        assert ideal.labels == ["alpha(1,0)", "alpha(1,1)", "alpha(2,0)", "alpha(3,0)", "alpha(4,0)", "alpha(5,0)"]

    @pytest.mark.parametrize("r,d", [(0, 1), (0, 3), (1, 3), (2, 3), (1, 5)])
    def test_presentation_relation_redundant(self, r, d):
        """P_{r,d} at H = (d+1)/2 c1 lies in the reduced ideal"""
        assert presentation_relation_redundant(r, d).member


class TestPresentationEquality:
    def test_known_presentation(self):
        """(2, 3) has a closed form; other cells do not"""
        assert known_presentation(2, 3) == [9 * c1 ** 2 - 27 * c2, c1 ** 3, 6 * c1 ** 2 * c2 ** 2 + 9 * c2 ** 3]
        assert known_presentation(1, 3) is None

    def test_family_equals_presentation(self):
        """Every alpha at r = 2, d = 3 generates the closed-form ideal, with certificates both ways"""
        result = presentation_equality(2, 3)
        assert result.equal and result.certificates_agree
        assert len(result.family_in_presentation) == 9
        assert len(result.presentation_in_family) == 3
        for g, member in result.family_in_presentation + result.presentation_in_family:
            assert member.member
            assert member.certificate is not None

    def test_reduction_table(self):
        """alpha_{2,0} = (4c1^2 - 7c2) alpha_{1,0} - 3c1 alpha_{1,1}"""
        result = presentation_equality(2, 3, threads=2)
        assert result.reduction_matches
        assert result.reduction[1].certificate.cofactors == [4 * c1 ** 2 - 7 * c2, -3 * c1]

    def test_without_closed_form(self):
        """Cells without a closed form are rejected"""
        with pytest.raises(ValueError):
            presentation_equality(1, 5)
