import pytest
import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from chowmaps.algebra.poly_core import ZZ_CHERN
from chowmaps.core.exceptions import EvenDegreeError, NotHomogeneousError
from chowmaps.relations.first_envelope import (
    Z1Pair, Z1Path, claim_R_coefficients, expected_claim_R, factorization_identity,
    functional_equation_check, genfun_alpha1, genfun_denominator, grassmannian_check,
    recursion_alpha1, z1_pair
)

c1, c2 = ZZ_CHERN.gens


class TestGeneratingFunctions:
    def test_denominator(self):
        """d = 3: 1 - c1 - 2c1^2 + 9c2"""
        assert genfun_denominator(3) == 1 - c1 - 2 * c1 ** 2 + 9 * c2

    def test_known_values(self):
        """Slices for r = 2, d = 3"""
        assert genfun_alpha1(0, 2, 3) == 9 * c1 ** 2 - 27 * c2
        assert genfun_alpha1(1, 2, 3) == 8 * c1 ** 3 - 27 * c1 * c2
        assert genfun_alpha1(1, 1, 3) == 4 * c1 ** 2 - 9 * c2

    @pytest.mark.parametrize("d", [1, 3, 5, 7])
    def test_constant_slice(self, d):
        """alpha^0_{1,0} = d and alpha^0_{1,1} = (d+1)/2 c1"""
        assert genfun_alpha1(0, 0, d) == ZZ_CHERN.ground_new(d)
        assert genfun_alpha1(1, 0, d) == ((d + 1) // 2) * c1

    def test_larger_bound_same_slice(self):
        """Truncating later does not change a slice"""
        assert genfun_alpha1(0, 2, 5, bound=6) == genfun_alpha1(0, 2, 5)

    def test_bound_below_target(self):
        """alpha_{1,1} at r = 2 needs degree 3"""
        with pytest.raises(ValueError):
            genfun_alpha1(1, 2, 3, bound=2)

    def test_invalid_arguments(self):
        """k outside {0, 1}, negative r and even d"""
        with pytest.raises(ValueError):
            genfun_alpha1(2, 1, 3)
        with pytest.raises(ValueError):
            genfun_alpha1(0, -1, 3)
        with pytest.raises(EvenDegreeError):
            genfun_alpha1(0, 1, 4)


class TestRecursion:
    def test_first_step(self):
        """alpha^1_{1,0} = 3c1 at d = 3"""
        assert recursion_alpha1(0, 1, 3) == 3 * c1
        assert recursion_alpha1(1, 0, 5) == 3 * c1

    @pytest.mark.parametrize("d", [1, 3, 5, 7, 9])
    def test_agrees_with_genfun(self, d):
        """Both paths give the same slices for r <= 5"""
        for r in range(6):
            assert z1_pair(r, d, Z1Path.RECURSION) == Z1Pair(
                genfun_alpha1(0, r, d), genfun_alpha1(1, r, d), r, d, Z1Path.RECURSION
            )

    def test_pair_degrees_checked(self):
        """a10 must have degree r"""
        with pytest.raises(NotHomogeneousError):
            Z1Pair(c1, c1 ** 2, 0, 3, Z1Path.GENFUN)


class TestIdentities:
    @pytest.mark.parametrize("d", [1, 3, 5, 7])
    def test_claim_R(self, d):
        """Remainder coefficients match their closed forms"""
        assert claim_R_coefficients(d) == expected_claim_R(d)

    @pytest.mark.parametrize("d", [3, 5, 7, 9])
    def test_factorization(self, d):
        """P_d = (d^2 c2 - (d^2-1)/4 c1^2) P_{d-2}"""
        assert factorization_identity(d)

    @pytest.mark.parametrize("path", [Z1Path.GENFUN, Z1Path.RECURSION])
    def test_functional_equation(self, path):
        """The two series satisfy their linear system up to degree 6"""
        report = functional_equation_check(3, 6, path)
        assert report.holds
        assert report.failing_degrees == []

    def test_grassmannian(self):
        """d = 1 reduces to 1/(1 - c1 + c2)"""
        for r in range(7):
            assert grassmannian_check(r)
            assert grassmannian_check(r, Z1Path.RECURSION)

    def test_grassmannian_values(self):
        """r = 3 at d = 1"""
        pair = z1_pair(3, 1)
        assert pair.a10 == c1 ** 3 - 2 * c1 * c2
        assert pair.a11 == c1 ** 4 - 3 * c1 ** 2 * c2 + c2 ** 2
