"""
Presentation of the integral Chow ring: Z[c1, c2] modulo the alpha classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement

from ..algebra.poly_core import ZZ_CHERN, demote, format_poly, homogeneous_degree, to_terms
from ..algebra.weights import require_odd, symmetric_P
from ..core.logging import get_logger
from ..ideals.graded_ideal import GradedIdeal, MembershipResult, ideal_equal, membership
from ..models.reports import ClassReport, PresentationReport
from ..relations.catalog import all_keys, compute_relation_set, reduced_keys
from ..relations.localization import PINNED_SIGN, RelationClass, RelationSet, RestrictionSign

logger = get_logger("chowmaps.presentation")


def class_report(relation: RelationClass) -> ClassReport:
    return ClassReport(
        label=relation.label,
        i=relation.i,
        k=relation.k,
        degree=relation.degree,
        provenance=relation.provenance.value,
        text=format_poly(relation.poly),
        terms=to_terms(relation.poly),
    )


def reduced_ideal(relations: RelationSet) -> GradedIdeal:
    """Ideal of alpha_{1,0}, alpha_{1,1} and alpha_{q,0} for prime powers q <= d."""
    keys = reduced_keys(relations.d)
    return GradedIdeal(
        [relations[key] for key in keys], ZZ, [relations.classes[key].label for key in keys]
    )


def presentation_document(
    r: int,
    d: int,
    full: bool = False,
    threads: int = 1,
    sign: RestrictionSign = PINNED_SIGN,
) -> PresentationReport:
    require_odd(d)
    keys = all_keys(d) if full else reduced_keys(d)
    relations = compute_relation_set(r, d, keys, threads=threads, sign=sign)
    generators: List[ClassReport] = [
        class_report(c) for c in relations.ordered(reduced_keys(d))
    ]
    everything = [class_report(c) for c in relations.ordered(all_keys(d))] if full else []
    logger.info(f"✅ presentation for r={r}, d={d}: {len(generators)} generators")
    return PresentationReport(r=r, d=d, full=full, generators=generators, relations=everything)


def presentation_relation_redundant(r: int, d: int, threads: int = 1) -> MembershipResult:
    """Membership of P_{r,d}((d+1)/2 c1) in the reduced ideal."""
    require_odd(d)
    relation = demote(symmetric_P(d, r))
    relations = compute_relation_set(r, d, reduced_keys(d), threads=threads)
    result = membership(relation, reduced_ideal(relations))
    logger.debug(
        f"P_(r={r},d={d}) of degree {homogeneous_degree(relation)} "
        f"{'lies' if result.member else 'does not lie'} in the reduced ideal"
    )
    return result


def _known_presentations() -> Dict[Tuple[int, int], List[PolyElement]]:
    c1, c2 = ZZ_CHERN.gens
    return {(2, 3): [9 * c1 ** 2 - 27 * c2, c1 ** 3, 6 * c1 ** 2 * c2 ** 2 + 9 * c2 ** 3]}


# alpha_{2,0} = (4c1^2 - 7c2) alpha_{1,0} - 3c1 alpha_{1,1} at r = 2, d = 3
def _reduction_table() -> Dict[Tuple[int, int], List[PolyElement]]:
    c1, c2 = ZZ_CHERN.gens
    return {(2, 3): [4 * c1 ** 2 - 7 * c2, -3 * c1]}


def known_presentation(r: int, d: int) -> Optional[List[PolyElement]]:
    """Closed-form generators of the relation ideal, where one is on record."""
    return _known_presentations().get((r, d))


@dataclass
class PresentationEquality:
    """The alpha family against a closed-form presentation, with certificates both ways."""
    r: int
    d: int
    equal: bool
    family_in_presentation: List[Tuple[PolyElement, MembershipResult]]
    presentation_in_family: List[Tuple[PolyElement, MembershipResult]]
    reduction: Optional[Tuple[PolyElement, MembershipResult]] = None
    reduction_expected: Optional[List[PolyElement]] = None

    @property
    def certificates_agree(self) -> bool:
        """Every membership succeeded and equality agrees with them."""
        results = [res for _, res in self.family_in_presentation + self.presentation_in_family]
        return self.equal == all(res.member for res in results)

    @property
    def reduction_matches(self) -> bool:
        if self.reduction is None:
            return True
        result = self.reduction[1]
        return result.member and result.certificate.cofactors == self.reduction_expected


def presentation_equality(r: int, d: int, threads: int = 1,
                          sign: RestrictionSign = PINNED_SIGN) -> PresentationEquality:
    """Compare every alpha_{i,k}^{r,d} with the closed-form presentation over Z."""
    require_odd(d)
    generators = known_presentation(r, d)
    if generators is None:
        raise ValueError(f"no closed-form presentation on record for r={r}, d={d}")
    relations = compute_relation_set(r, d, threads=threads, sign=sign)
    keys = relations.keys()
    family = GradedIdeal([relations[key] for key in keys], ZZ, [relations.classes[key].label for key in keys])
    presentation = GradedIdeal(generators, ZZ)

    forward = [(relations[key], membership(relations[key], presentation)) for key in keys]
    backward = [(g, membership(g, family)) for g in generators]
    result = PresentationEquality(r, d, ideal_equal(family, presentation), forward, backward)

    cofactors = _reduction_table().get((r, d))
    if cofactors is not None:
        first = GradedIdeal([relations[(1, 0)], relations[(1, 1)]], ZZ)
        result.reduction = (relations[(2, 0)], membership(relations[(2, 0)], first))
        result.reduction_expected = cofactors
    logger.info(
        f"{'✅' if result.equal else '❌'} alpha family for r={r}, d={d} "
        f"{'equals' if result.equal else 'differs from'} the closed-form presentation"
    )
    return result
