"""
Torus-weight workspace Q[H, h, l1, l2].

The Chern roots satisfy c1 = -(l1 + l2) and c2 = l1*l2 everywhere in the
package. H is the hyperplane class of the target, h the hyperplane class of
the left envelope factor.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from ..core.exceptions import EvenDegreeError, NotDivisibleError, NotSymmetricError
from ..core.logging import get_logger
from .poly_core import QQ_CHERN, format_poly, substitute

logger = get_logger("chowmaps.weights")

WeightPoly = PolyElement

WEIGHT_RING, H, h, l1, l2 = ring("H,h,l1,l2", QQ, grlex)

# symmetrization runs in the two-root subring
_ROOT_RING, _r1, _r2 = ring("l1,l2", QQ, grlex)
_E1 = _r1 + _r2
_E2 = _r1 * _r2


def require_odd(d: int) -> None:
    if d % 2 == 0:
        raise EvenDegreeError("Degree must be odd", degree=d)


def linear_factor(d: int, m: int, var: Union[PolyElement, None] = None) -> WeightPoly:
    """var + (d - m) l1 + m l2, the weight of the m-th coordinate of W_d."""
    base = H if var is None else var
    return base + (d - m) * l1 + m * l2


def build_P(r: int, d: int, var: Union[PolyElement, None] = None) -> WeightPoly:
    """P_{r,d}(var) = prod_{k=0..d} (var + (d-k) l1 + k l2)^(r+1), expanded."""
    if r < 0 or d < 0:
        raise ValueError(f"build_P needs r >= 0 and d >= 0, got r={r}, d={d}")
    product = WEIGHT_RING.one
    for k in range(d + 1):
        product *= linear_factor(d, k, var)
    return product ** (r + 1)


def build_partial_P(a: int, k: int, var: Union[PolyElement, None] = None) -> WeightPoly:
    """prod_{s<k} (var + (a-s) l1 + s l2): class of the forms in W_a divisible by y^k."""
    if not 0 <= k <= a:
        raise ValueError(f"build_partial_P needs 0 <= k <= a, got a={a}, k={k}")
    product = WEIGHT_RING.one
    for s in range(k):
        product *= linear_factor(a, s, var)
    return product


def hyperplane_value(d: int) -> WeightPoly:
    """(d+1)/2 * c1 written in roots: -(d+1)/2 (l1 + l2)."""
    require_odd(d)
    return -QQ(d + 1, 2) * (l1 + l2)


def specialize_H(p: WeightPoly, d: int) -> WeightPoly:
    """Eliminate H by H = (d+1)/2 c1; only defined for odd d."""
    return substitute(p, H, hyperplane_value(d))


def chern_to_weights(q: PolyElement) -> WeightPoly:
    """Image of a Chern polynomial under c1 -> -(l1+l2), c2 -> l1 l2."""
    c1_image = -(l1 + l2)
    c2_image = l1 * l2
    result = WEIGHT_RING.zero
    for (e1, e2), coeff in q.items():
        result += (c1_image ** e1) * (c2_image ** e2) * QQ.convert(coeff)
    return result


def swap_roots(p: WeightPoly) -> WeightPoly:
    return WEIGHT_RING.from_dict({(a, b, e2, e1): c for (a, b, e1, e2), c in p.items()})


def is_symmetric(p: WeightPoly) -> bool:
    return swap_roots(p) == p


def _to_root_ring(p: WeightPoly) -> PolyElement:
    terms = {}
    for (eH, eh, e1, e2), coeff in p.items():
        if eH or eh:
            raise ValueError(f"symmetrize_to_chern expects a polynomial in l1, l2 only: {format_poly(p)}")
        terms[(e1, e2)] = coeff
    return _ROOT_RING.from_dict(terms)


def symmetrize_to_chern(p: WeightPoly) -> PolyElement:
    """Rewrite a symmetric polynomial in l1, l2 as a polynomial in c1, c2 over Q.

    Peels off the leading term a l1^x l2^y (x >= y) as a e1^(x-y) e2^y until
    nothing is left; e1 = -c1 and e2 = c2.
    """
    if not is_symmetric(p):
        raise NotSymmetricError(
            "Polynomial is not symmetric in l1, l2",
            {"polynomial": format_poly(p)},
        )
    rest = _to_root_ring(p)
    e1_powers: Dict[int, PolyElement] = {0: _ROOT_RING.one}
    e2_powers: Dict[int, PolyElement] = {0: _ROOT_RING.one}
    result: Dict[Tuple[int, int], object] = {}
    while rest:
        (x, y), coeff = rest.LT
        a, b = x - y, y
        if a not in e1_powers:
            e1_powers[a] = _E1 ** a
        if b not in e2_powers:
            e2_powers[b] = _E2 ** b
        # e1 = -c1
        result[(a, b)] = coeff if a % 2 == 0 else -coeff
        rest = rest - (e1_powers[a] * e2_powers[b]).mul_ground(coeff)
    return QQ_CHERN.from_dict(result)


def divide_by_weight_diff(p: WeightPoly, i: int) -> WeightPoly:
    """q with p = q (l2 - l1)^i, exactly."""
    if i < 0:
        raise ValueError(f"power must be non-negative, got {i}")
    if i == 0 or not p:
        return p
    try:
        return p.exquo((l2 - l1) ** i)
    except ExactQuotientFailed:
        raise NotDivisibleError(
            f"Localization sum is not divisible by (l2 - l1)^{i}",
            {"power": i, "terms": len(p)},
        )


def lemma_factor(d: int) -> PolyElement:
    """Symmetrized (H + d l1)(H + d l2) at H = (d+1)/2 c1."""
    return symmetrize_to_chern(specialize_H((H + d * l1) * (H + d * l2), d))


@lru_cache(maxsize=None)
def symmetric_P(d: int, r: int = 0) -> PolyElement:
    """P_{r,d} at H = (d+1)/2 c1 as a Chern polynomial over Q; P_{-1} = 1."""
    if d == -1:
        return QQ_CHERN.one
    require_odd(d)
    logger.debug(f"building symmetric P for r={r}, d={d}")
    return symmetrize_to_chern(specialize_H(build_P(r, d), d))
