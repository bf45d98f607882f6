"""
Rational comparison with the degree-one space.

Post-composition with a fixed degree d self-map of P^r identifies the rational
Chow rings of the degree-d and degree-1 spaces; on Chern classes it acts by
c1 -> c1/d, c2 -> c2 - (d^2-1) c1^2 / (4 d^2), which carries the degree-one
relations onto the degree-d ones. The degree-d generators are moved back with
the inverse substitution c1 -> d c1, c2 -> c2 + (d^2-1)/4 c1^2 and the two
ideals are compared over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from ..algebra.poly_core import QQ_CHERN, promote
from ..algebra.weights import require_odd
from ..core.logging import get_logger
from ..ideals.graded_ideal import GradedIdeal, compare_ideals
from .catalog import compute_relation_set
from .first_envelope import genfun_alpha1

logger = get_logger("chowmaps.pullback")


@dataclass
class PullbackReport:
    r: int
    d: int
    equal_over_Q: bool
    degree_checked: int
    ratios: Dict[str, Optional[str]] = field(default_factory=dict)
    unmatched_degree_d: List[str] = field(default_factory=list)
    unmatched_degree_one: List[str] = field(default_factory=list)


def transport_to_degree_one(p: PolyElement, d: int) -> PolyElement:
    """Apply c1 -> d c1, c2 -> c2 + (d^2-1)/4 c1^2 over Q."""
    c1, c2 = QQ_CHERN.gens
    c1_image = c1 * d
    c2_image = c2 + c1 ** 2 * QQ(d * d - 1, 4)
    result = QQ_CHERN.zero
    for (e1, e2), coeff in promote(p).items():
        result += (c1_image ** e1) * (c2_image ** e2) * coeff
    return result


def pullback_substitution(p: PolyElement, d: int) -> PolyElement:
    """c1 -> c1/d, c2 -> c2 - (d^2-1) c1^2/(4 d^2) over Q."""
    c1, c2 = QQ_CHERN.gens
    c1_image = c1 * QQ(1, d)
    c2_image = c2 - c1 ** 2 * QQ(d * d - 1, 4 * d * d)
    result = QQ_CHERN.zero
    for (e1, e2), coeff in promote(p).items():
        result += (c1_image ** e1) * (c2_image ** e2) * coeff
    return result


def _ratio(a: PolyElement, b: PolyElement) -> Optional[str]:
    if not a or not b:
        return None
    monom = b.leading_expv()
    scale = a.get(monom, QQ.zero) / b[monom]
    return str(scale) if scale and a == b * scale else None


def phi_pullback_check(r: int, d: int, threads: int = 1) -> PullbackReport:
    """Compare the degree-d and degree-one relation ideals over Q.

    The degree-d classes are carried to the degree-one ring with
    ``transport_to_degree_one`` (c1 -> d c1), the inverse of the
    ``pullback_substitution`` that acts on Chern classes. Applying that
    substitution to the degree-d classes instead does not reproduce the
    degree-one ideal (it fails already at r = 2, d = 3).
    """
    require_odd(d)
    relations = compute_relation_set(r, d, threads=threads)
    moved = [transport_to_degree_one(relations[key], d) for key in relations.keys()]
    labels = [f"alpha({i},{k})" for i, k in relations.keys()]
    degree_d = GradedIdeal(moved, QQ, labels)
    degree_one = GradedIdeal(
        [promote(genfun_alpha1(0, r, 1)), promote(genfun_alpha1(1, r, 1))], QQ,
        ["alpha(1,0)", "alpha(1,1)"],
    )
    comparison = compare_ideals(degree_d, degree_one)

    ratios = {
        f"alpha(1,{k})": _ratio(moved[labels.index(f"alpha(1,{k})")], degree_one.generators[k])
        for k in (0, 1)
    }
    report = PullbackReport(
        r=r,
        d=d,
        equal_over_Q=comparison.equal,
        degree_checked=d * r + d,
        ratios=ratios,
        unmatched_degree_d=[labels[j] for j in comparison.missing_from_second],
        unmatched_degree_one=[degree_one.labels[j] for j in comparison.missing_from_first],
    )
    if not report.equal_over_Q:
        logger.warning(f"⚠️ rational comparison differs for r={r}, d={d}")
    return report
