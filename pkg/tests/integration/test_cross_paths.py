import pytest
import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from math import comb

from chowmaps.algebra.poly_core import ZZ_CHERN
from chowmaps.core.config import Settings
from chowmaps.ideals.binomials import binomial_gcd
from chowmaps.models.reports import VerifyKind
from chowmaps.relations.first_envelope import (
    claim_R_coefficients, expected_claim_R, factorization_identity, genfun_alpha1,
    grassmannian_check, recursion_alpha1
)
from chowmaps.relations.localization import (
    alpha_i0, alpha_ik, hadamard_genfun_alpha0, lemma_pushforward_check, poly_in_d_check
)
from chowmaps.services.verification import VerificationService, conjecture_verify, reduction_verify

ODD_UP_TO_9 = [1, 3, 5, 7, 9]
ODD_UP_TO_15 = [1, 3, 5, 7, 9, 11, 13, 15]
ODD_UP_TO_21 = [3, 5, 7, 9, 11, 13, 15, 17, 19, 21]


@pytest.mark.slow
@pytest.mark.integration
class TestCrossPaths:
    @pytest.mark.parametrize("d", ODD_UP_TO_15)
    def test_genfun_vs_recursion(self, d):
        """Generating functions and recursion agree for r <= 10"""
        for r in range(11):
            for k in (0, 1):
                assert genfun_alpha1(k, r, d) == recursion_alpha1(k, r, d)

    @pytest.mark.parametrize("d", ODD_UP_TO_9)
    def test_localization_vs_hadamard(self, d):
        """Localization and the Hadamard power agree for i <= d, r <= 4"""
        for r in range(5):
            entries = hadamard_genfun_alpha0(r, d)
            for i in range(1, d + 1):
                assert alpha_i0(i, r, d) == entries[i]

    @pytest.mark.parametrize("d", ODD_UP_TO_9)
    def test_localization_vs_genfun(self, d):
        """Localization at i = 1 reproduces the generating functions for r <= 8"""
        for r in range(9):
            for k in (0, 1):
                assert alpha_ik(1, k, r, d) == genfun_alpha1(k, r, d)

    @pytest.mark.parametrize("d", ODD_UP_TO_15)
    def test_binomial_oracle(self, d):
        """alpha^0_{i,0} = C(d, i)"""
        for i in range(1, d + 1):
            assert alpha_i0(i, 0, d) == ZZ_CHERN.ground_new(comb(d, i))

    def test_grassmannian(self):
        """d = 1 against 1/(1 - c1 + c2) for r <= 6"""
        assert all(grassmannian_check(r) for r in range(7))


@pytest.mark.slow
@pytest.mark.integration
class TestIdentitySuites:
    @pytest.mark.parametrize("d", [1] + ODD_UP_TO_21)
    def test_claim_R(self, d):
        """Remainder identities for odd d <= 21"""
        assert claim_R_coefficients(d) == expected_claim_R(d)

    @pytest.mark.parametrize("d", ODD_UP_TO_21)
    def test_factorization(self, d):
        """P_d factors through P_{d-2} for odd 3 <= d <= 21"""
        assert factorization_identity(d)

    def test_pushforward_family(self):
        """P_{a,k}(h) pushes to C(i-k, a-k) P_{i,k}(H) for 0 <= k <= a < i <= 7"""
        for i in range(1, 8):
            for a in range(i):
                for k in range(a + 1):
                    assert lemma_pushforward_check(a, k, i).holds, (a, k, i)

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_polynomiality(self, i):
        """Coefficients of alpha_{i,0} are polynomials in d for r <= 2"""
        for r in range(3):
            report = poly_in_d_check(i, r)
            assert report.extra_points_match, report.mismatches

    def test_binomial_gcd(self):
        """gcd classification for 2 <= i <= 200"""
        for i in range(2, 201):
            result = binomial_gcd(i)
            assert result.is_prime_power == (result.gcd > 1)


@pytest.mark.slow
@pytest.mark.integration
class TestIdealSuites:
    @pytest.mark.parametrize("d", ODD_UP_TO_9)
    def test_reduction(self, d):
        """Every alpha lies in the prime-power ideal over Z for r <= 3"""
        for r in range(4):
            report = reduction_verify(r, d, threads=2)
            assert report.all_member, (r, d, report.violations)

    @pytest.mark.parametrize("d", ODD_UP_TO_9)
    def test_conjecture(self, d):
        """The prime-divisor set generates minimally for 1 <= r <= 3"""
        for r in range(1, 4):
            report = conjecture_verify(r, d, threads=2)
            assert report.generated, (r, d, report.missing)
            assert report.minimal, (r, d, report.redundant)

    def test_service_default_grid(self):
        """The reduction suite passes on its default grid"""
        report = VerificationService(Settings(), threads=4).run(VerifyKind.REDUCTION, range(0, 4), ODD_UP_TO_9)
        assert report.passed, report.failing
