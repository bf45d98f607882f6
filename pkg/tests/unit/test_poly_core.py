import pytest
import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from sympy.polys.domains import QQ

from chowmaps.algebra.poly_core import (
    QQ_CHERN, ZZ_CHERN, TruncatedSeries, demote, format_poly, from_terms, grade_component,
    homogeneous_components, homogeneous_degree, is_homogeneous, poly_exact_div, poly_mul,
    promote, series_invert, substitute, to_terms
)
from chowmaps.core.exceptions import DemotionError, NotDivisibleError, NotInvertibleError

c1, c2 = ZZ_CHERN.gens

SAMPLES = [
    ZZ_CHERN.zero,
    ZZ_CHERN.one,
    c1 - 3 * c2,
    2 * c1 ** 3 + c1 * c2 - 5,
    -c2 ** 2 + 4 * c1 ** 2 * c2 + c1,
    9 * c1 ** 2 - 27 * c2,
]
TRIPLES = [(a, b, c) for a in SAMPLES[2:] for b in SAMPLES[1:4] for c in SAMPLES[3:]]


class TestArithmetic:
    def test_poly_mul(self):
        """Products stay in the Chern ring"""
        assert poly_mul(c1 + c2, c1 - c2) == c1 ** 2 - c2 ** 2

    def test_poly_mul_rejects_mixed_rings(self):
        """Z and Q polynomials are never mixed silently"""
        with pytest.raises(TypeError):
            poly_mul(c1, promote(c1))

    def test_exact_division(self):
        """Exact quotient of (c1^2 - 3c2) c1 by c1"""
        assert poly_exact_div((c1 ** 2 - 3 * c2) * c1, c1) == c1 ** 2 - 3 * c2

    def test_division_with_remainder(self):
        """A remainder raises NotDivisibleError"""
        with pytest.raises(NotDivisibleError):
            poly_exact_div(c1 ** 2 + c2, c1)

    def test_division_by_zero(self):
        """The zero divisor is rejected"""
        with pytest.raises(ZeroDivisionError):
            poly_exact_div(c1, ZZ_CHERN.zero)

    @pytest.mark.parametrize("a,b,c", TRIPLES)
    def test_ring_axioms(self, a, b, c):
        """Commutativity, associativity and distributivity"""
        assert poly_mul(a, b) == poly_mul(b, a)
        assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
        assert poly_mul(a, b + c) == poly_mul(a, b) + poly_mul(a, c)

    @pytest.mark.parametrize("a", SAMPLES)
    @pytest.mark.parametrize("b", SAMPLES[1:])
    def test_division_undoes_multiplication(self, a, b):
        """(a*b)/b == a for nonzero b"""
        assert poly_exact_div(poly_mul(a, b), b) == a


class TestSubstitution:
    def test_substitute_in_same_ring(self):
        """c2 -> c1^2 collapses c1^2 + c2"""
        assert substitute(c1 ** 2 + c2, "c2", c1 ** 2) == 2 * c1 ** 2

    def test_substitute_by_generator(self):
        """Variables may be named by generator"""
        assert substitute(c1 * c2, c1, ZZ_CHERN.ground_new(3)) == 3 * c2

    def test_unknown_variable(self):
        """Unknown variable names are rejected"""
        with pytest.raises(ValueError):
            substitute(c1, "c3", c1)


class TestGrading:
    def test_grade_component(self):
        """Degree 2 part of 1 + c1 + c1^2 + c2"""
        p = 1 + c1 + c1 ** 2 + c2
        assert grade_component(p, 2) == c1 ** 2 + c2
        assert grade_component(p, 0) == ZZ_CHERN.one
        assert grade_component(p, 5) == ZZ_CHERN.zero

    def test_homogeneous_degree(self):
        """c2 has weight 2"""
        assert homogeneous_degree(9 * c1 ** 2 - 27 * c2) == 2
        assert homogeneous_degree(c1 + c2) is None
        assert homogeneous_degree(ZZ_CHERN.zero) is None
        assert is_homogeneous(ZZ_CHERN.zero)

    @pytest.mark.parametrize("p", SAMPLES)
    def test_components_reassemble(self, p):
        """The homogeneous components add back up to p"""
        parts = homogeneous_components(p)
        assert sum(parts.values(), ZZ_CHERN.zero) == p
        assert all(homogeneous_degree(part) == degree for degree, part in parts.items())


class TestCoefficientRings:
    def test_promote_and_demote(self):
        """Integral polynomials survive a trip through Q"""
        p = 9 * c1 ** 2 - 27 * c2
        assert promote(p).ring == QQ_CHERN
        assert demote(promote(p)) == p

    def test_demote_rejects_fractions(self):
        """A coefficient 1/2 cannot be demoted"""
        with pytest.raises(DemotionError):
            demote(QQ_CHERN.gens[0].mul_ground(QQ(1, 2)))


class TestSeries:
    def test_geometric_series(self):
        """1/(1 - c1) = 1 + c1 + c1^2 + c1^3 up to degree 3"""
        inverse = series_invert(TruncatedSeries(1 - c1, 3))
        assert inverse.poly == 1 + c1 + c1 ** 2 + c1 ** 3

    def test_truncation(self):
        """Terms above the bound are dropped on construction"""
        series = TruncatedSeries(1 + c1 + c2 + c1 * c2, 2)
        assert series.poly == 1 + c1 + c2
        with pytest.raises(ValueError):
            series.component(3)

    def test_non_unit_constant(self):
        """2 + c1 has no inverse over Z"""
        with pytest.raises(NotInvertibleError):
            series_invert(TruncatedSeries(2 + c1, 2))

    def test_rational_inverse(self):
        """Over Q the constant only has to be nonzero"""
        a, b = QQ_CHERN.gens
        inverse = series_invert(TruncatedSeries(2 + a, 1))
        assert inverse.poly == QQ_CHERN.ground_new(QQ(1, 2)) - a.mul_ground(QQ(1, 4))

    @pytest.mark.parametrize("tail", SAMPLES)
    @pytest.mark.parametrize("bound", [0, 1, 3, 5])
    def test_inverse_property(self, tail, bound):
        """u * u^-1 = 1 up to the bound whenever u has constant term 1"""
        u = TruncatedSeries(1 + tail - grade_component(tail, 0), bound)
        product = u * series_invert(u)
        assert product.poly == ZZ_CHERN.one


class TestSerialization:
    def test_text_format(self):
        """Unicode rendering with the minus sign"""
        assert format_poly(9 * c1 ** 2 - 27 * c2) == "9c₁² − 27c₂"
        assert format_poly(8 * c1 ** 3 - 27 * c1 * c2) == "8c₁³ − 27c₁c₂"
        assert format_poly(ZZ_CHERN.zero) == "0"

    def test_latex_and_ascii(self):
        """LaTeX and ASCII styles"""
        p = 9 * c1 ** 2 - 27 * c2
        assert format_poly(p, style="latex") == "9c_1^{2} - 27c_2"
        assert format_poly(p, style="ascii") == "9*c1^2 - 27*c2"

    def test_terms(self):
        """Canonical term list, ascending degree then c1 exponent descending"""
        p = 12 * c1 ** 4 - 90 * c1 ** 2 * c2 + 189 * c2 ** 2
        assert to_terms(p) == [["12", 4, 0], ["-90", 2, 1], ["189", 0, 2]]
        assert from_terms(to_terms(p)) == p

    def test_terms_shape_checked(self):
        """A term with the wrong number of exponents is rejected"""
        with pytest.raises(ValueError):
            from_terms([["1", 1, 0, 0]])
