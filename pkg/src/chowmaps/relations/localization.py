"""
Localization engine for the envelope components P(W_i) x P(W_{d-i}^{r+1}).

The pushforward of a class q(h) along pi_i is a sum over the i+1 torus fixed
points of P(W_i). At the j-th point the image of the fixed locus is cut out
by every weight factor of P_{r,d}(H) except those with m in [j, d-i+j], so the
contribution is q(rho_j) times the product of the kept factors, divided by the
Euler class (-1)^j j! (i-j)! (l2 - l1)^i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Optional, Tuple

from sympy import Poly, Symbol, interpolate
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from ..algebra.poly_core import ZZ_CHERN, demote, format_poly, homogeneous_degree, substitute
from ..algebra.weights import (
    WEIGHT_RING,
    H,
    WeightPoly,
    build_partial_P,
    divide_by_weight_diff,
    h,
    hyperplane_value,
    l1,
    l2,
    linear_factor,
    require_odd,
    symmetrize_to_chern,
)
from ..core.exceptions import EnvelopeIndexError, IdentityViolatedError, NotHomogeneousError
from ..core.logging import get_logger

logger = get_logger("chowmaps.localization")


class RestrictionSign(str, Enum):
    """Sign of the restriction of h to the fixed point q_j."""
    NEGATIVE = "negative"   # rho_j = -((i-j) l1 + j l2)
    POSITIVE = "positive"   # rho_j = +((i-j) l1 + j l2)


PINNED_SIGN = RestrictionSign.NEGATIVE


@dataclass
class LocalizationSum:
    """Fixed-point sum over common denominator (l2 - l1)^i."""
    i: int
    d: int
    r: int
    numerator: WeightPoly
    denominator_power: int
    specialized: bool = False

    def resolve(self) -> WeightPoly:
        return divide_by_weight_diff(self.numerator, self.denominator_power)


def fixed_point_weight(i: int, j: int, sign: RestrictionSign = PINNED_SIGN) -> WeightPoly:
    weight = (i - j) * l1 + j * l2
    return -weight if sign is RestrictionSign.NEGATIVE else weight


def euler_class_check(i: int, sign: RestrictionSign = PINNED_SIGN) -> bool:
    """Tangent weights at each fixed point multiply to (-1)^j j! (i-j)! (l2-l1)^i."""
    diff = (l2 - l1) ** i if i else WEIGHT_RING.one
    for j in range(i + 1):
        rho_j = fixed_point_weight(i, j, sign)
        product = WEIGHT_RING.one
        for k in range(i + 1):
            if k != j:
                product *= rho_j - fixed_point_weight(i, k, sign)
        expected = diff * ((-1) ** j * factorial(j) * factorial(i - j))
        if product != expected:
            logger.error(f"❌ Euler class mismatch at i={i}, j={j}")
            return False
    return True


def kept_indices(i: int, d: int, j: int) -> List[int]:
    return list(range(0, j)) + list(range(d - i + j + 1, d + 1))


def localization_sum(
    q: WeightPoly,
    i: int,
    d: int,
    r: int,
    specialized: bool = False,
    sign: RestrictionSign = PINNED_SIGN,
    check_euler: bool = False,
) -> LocalizationSum:
    if not 0 <= i <= d:
        raise EnvelopeIndexError(
            f"Envelope index i={i} outside 0..d={d}", {"i": i, "d": d}
        )
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    if check_euler and not euler_class_check(i, sign):
        raise IdentityViolatedError("Euler class identity failed", {"i": i, "sign": sign.value})

    base = hyperplane_value(d) if specialized else H
    if specialized:
        require_odd(d)
    powers = [linear_factor(d, m, base) ** (r + 1) for m in range(d + 1)]

    numerator = WEIGHT_RING.zero
    for j in range(i + 1):
        restricted = substitute(q, h, fixed_point_weight(i, j, sign))
        if not restricted:
            continue
        term = restricted
        for m in kept_indices(i, d, j):
            term = term * powers[m]
        scale = QQ((-1) ** j, factorial(j) * factorial(i - j))
        numerator += term.mul_ground(scale)
    return LocalizationSum(i, d, r, numerator, i, specialized)


def localize_pushforward(
    q: WeightPoly,
    i: int,
    d: int,
    r: int,
    specialized: bool = False,
    sign: RestrictionSign = PINNED_SIGN,
    check_euler: bool = False,
) -> WeightPoly:
    """Equivariant pushforward of q(h) along pi_i as a polynomial in H, l1, l2.

    With ``specialized`` the hyperplane class is set to (d+1)/2 c1 before the
    products are expanded; the result equals specialize_H of the generic one.
    """
    total = localization_sum(q, i, d, r, specialized, sign, check_euler)
    return total.resolve()


@dataclass
class LemmaPushforwardReport:
    a: int
    k: int
    i: int
    binomial: int
    holds: bool


def lemma_pushforward_check(a: int, k: int, i: int) -> LemmaPushforwardReport:
    """Push P_{a,k}(h) from P(W_a) x P(W_{i-a}) to P(W_i) with r = 0 and generic H.

    The image of the forms divisible by y^k is finite of degree C(i-k, a-k)
    onto the forms of degree i divisible by y^k, so the result must be
    C(i-k, a-k) * P_{i,k}(H).
    """
    if not 0 <= k <= a < i:
        raise ValueError(f"lemma_pushforward_check needs 0 <= k <= a < i, got a={a}, k={k}, i={i}")
    pushed = localize_pushforward(build_partial_P(a, k, h), a, i, 0)
    binomial = comb(i - k, a - k)
    expected = build_partial_P(i, k, H) * binomial
    return LemmaPushforwardReport(a, k, i, binomial, pushed == expected)


@lru_cache(maxsize=4096)
def alpha_ik(i: int, k: int, r: int, d: int, sign: RestrictionSign = PINNED_SIGN,
             check_euler: bool = False) -> PolyElement:
    """alpha_{i,k}^{r,d}: pushforward of h^k from the i-th envelope component, over Z."""
    require_odd(d)
    if not 1 <= i <= d:
        raise EnvelopeIndexError(f"Envelope index i={i} outside 1..d={d}", {"i": i, "d": d})
    if not 0 <= k <= i:
        raise ValueError(f"k={k} outside 0..i={i}")
    pushed = localize_pushforward(h ** k, i, d, r, specialized=True, sign=sign, check_euler=check_euler)
    result = demote(symmetrize_to_chern(pushed))
    degree = homogeneous_degree(result)
    if result and degree != i * r + k:
        raise NotHomogeneousError(
            f"alpha({i},{k}) for r={r}, d={d} should be homogeneous of degree {i * r + k}",
            {"polynomial": format_poly(result)},
        )
    logger.debug(f"alpha({i},{k}) r={r} d={d}: {len(result)} terms")
    return result


def alpha_i0(i: int, r: int, d: int, sign: RestrictionSign = PINNED_SIGN,
             check_euler: bool = False) -> PolyElement:
    """Pushforward of the fundamental class of the i-th envelope component."""
    return alpha_ik(i, 0, r, d, sign, check_euler)


def _hadamard_factor(d: int, k) -> WeightPoly:
    # c1/2 + (k - d/2)(l2 - l1) with c1 = -(l1 + l2)
    c1 = -(l1 + l2)
    return c1.mul_ground(QQ(1, 2)) + (l2 - l1).mul_ground(QQ(2 * k - d, 2))


@lru_cache(maxsize=256)
def hadamard_genfun_alpha0(r: int, d: int) -> Tuple[PolyElement, ...]:
    """Entries i = 0..d read off the Hadamard (r+1)-power generating function.

    Entry i sums (-1)^mu a_{mu,nu}^{r+1} / (mu! nu!) over mu + nu = i, where
    a_{mu,nu} = prod_{k<mu} (c1/2 + (k - d/2)(l2-l1)) prod_{m<nu} (c1/2 + (d/2 - m)(l2-l1)),
    then clears (l2 - l1)^i.
    """
    require_odd(d)
    left = [WEIGHT_RING.one]
    right = [WEIGHT_RING.one]
    for n in range(d):
        left.append(left[-1] * _hadamard_factor(d, n))
        right.append(right[-1] * _hadamard_factor(d, d - n))
    entries = []
    for i in range(d + 1):
        total = WEIGHT_RING.zero
        for mu in range(i + 1):
            nu = i - mu
            coefficient = (left[mu] * right[nu]) ** (r + 1)
            total += coefficient.mul_ground(QQ((-1) ** mu, factorial(mu) * factorial(nu)))
        entries.append(demote(symmetrize_to_chern(divide_by_weight_diff(total, i))))
    return tuple(entries)


@dataclass
class PolynomialityReport:
    i: int
    r: int
    degree_bound: int
    sample_degrees: List[int]
    check_degrees: List[int]
    interpolated: Dict[str, str] = field(default_factory=dict)
    extra_points_match: bool = False
    mismatches: List[str] = field(default_factory=list)


def poly_in_d_check(i: int, r: int) -> PolynomialityReport:
    """Interpolate the coefficients of alpha_{i,0} as polynomials in d and test two more points."""
    if i < 1:
        raise ValueError(f"i must be at least 1, got {i}")
    bound = i * (r + 1)
    first = i if i % 2 else i + 1
    degrees = [first + 2 * n for n in range(bound + 3)]
    sample, extra = degrees[:bound + 1], degrees[bound + 1:]

    values = {d: alpha_i0(i, r, d) for d in degrees}
    top = i * r
    monomials = [(top - 2 * b, b) for b in range(top // 2 + 1)]
    d_symbol = Symbol("d")

    report = PolynomialityReport(i, r, bound, sample, extra)
    matched = True
    for monom in monomials:
        label = format_poly(_monomial_poly(monom), style="ascii")
        points = [(d, int(values[d].get(monom, 0))) for d in sample]
        fitted = interpolate(points, d_symbol)
        if Poly(fitted, d_symbol).degree() > bound:
            report.mismatches.append(f"{label}: interpolant degree exceeds {bound}")
            matched = False
        report.interpolated[label] = str(fitted)
        for d in extra:
            if fitted.subs(d_symbol, d) != int(values[d].get(monom, 0)):
                report.mismatches.append(f"{label}: mismatch at d={d}")
                matched = False
    report.extra_points_match = matched
    return report


def _monomial_poly(monom: Tuple[int, int]) -> PolyElement:
    return ZZ_CHERN.from_dict({monom: 1})


class Provenance(str, Enum):
    GENFUN = "genfun"
    RECURSION = "recursion"
    LOCALIZATION = "localization"
    HADAMARD = "hadamard"


@dataclass(frozen=True)
class RelationClass:
    i: int
    k: int
    poly: PolyElement
    provenance: Provenance

    @property
    def degree(self) -> Optional[int]:
        return homogeneous_degree(self.poly)

    @property
    def label(self) -> str:
        return f"alpha({self.i},{self.k})"


@dataclass
class RelationSet:
    """The family alpha_{i,k}^{r,d} keyed by (i, k), with the path that produced each."""
    r: int
    d: int
    classes: Dict[Tuple[int, int], RelationClass] = field(default_factory=dict)

    def add(self, i: int, k: int, poly: PolyElement, provenance: Provenance) -> None:
        self.classes[(i, k)] = RelationClass(i, k, poly, provenance)

    def __getitem__(self, key: Tuple[int, int]) -> PolyElement:
        return self.classes[key].poly

    def __contains__(self, key: Tuple[int, int]) -> bool:
        return key in self.classes

    def keys(self) -> List[Tuple[int, int]]:
        return sorted(self.classes)

    def ordered(self, keys: List[Tuple[int, int]]) -> List[RelationClass]:
        return [self.classes[key] for key in keys]
