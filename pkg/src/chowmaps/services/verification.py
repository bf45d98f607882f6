"""
Verification suites behind ``chowmaps verify``.

Every check produces CellResult rows tagged with its (i, k, r, d) cell. Grids
run on a thread pool; ``map`` keeps the rows in submission order so reports
do not depend on completion order.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from sympy.polys.domains import QQ, ZZ
from sympy.polys.rings import PolyElement

from ..algebra.poly_core import QQ_CHERN, ZZ_CHERN, format_poly, poly_exact_div, to_terms
from ..algebra.weights import lemma_factor, require_odd, symmetric_P
from ..core.config import Settings, get_settings
from ..core.exceptions import ChowMapsError
from ..core.logging import get_logger, log_execution_time
from ..ideals.graded_ideal import (
    GradedIdeal,
    MembershipResult,
    is_member,
    membership,
    minimality_check,
)
from ..models.reports import CellResult, MembershipReport, VerifyKind, VerifyReport
from ..relations.catalog import Key, compute_relation_set, conjecture_keys, reduced_keys
from ..relations.first_envelope import (
    Z1Path,
    claim_R_coefficients,
    factorization_identity,
    functional_equation_check,
    genfun_alpha1,
    grassmannian_check,
    recursion_alpha1,
)
from ..relations.localization import (
    PINNED_SIGN,
    RelationSet,
    RestrictionSign,
    alpha_i0,
    alpha_ik,
    euler_class_check,
    hadamard_genfun_alpha0,
    lemma_pushforward_check,
    poly_in_d_check,
)
from ..relations.pullback import phi_pullback_check
from .presentation import (
    known_presentation,
    presentation_equality,
    presentation_relation_redundant,
    reduced_ideal,
)

logger = get_logger("chowmaps.verification")

T = TypeVar("T")
R = TypeVar("R")
Outcome = Tuple[bool, Optional[str]]

LEMMA_SUITE_MAX = 7
POLYNOMIALITY_MAX_I = 3
POLYNOMIALITY_MAX_R = 2


def run_check(check: str, test: Callable[[], Outcome], exploratory: bool = False, **cell) -> CellResult:
    """Time one check; library errors count as a failed cell."""
    start = time.perf_counter()
    try:
        passed, detail = test()
    except ChowMapsError as e:
        passed, detail = False, str(e)
    elapsed = time.perf_counter() - start
    if not passed and not exploratory:
        logger.warning(
            f"❌ {check} failed at {cell}: {detail}",
            extra={"extra_fields": dict(cell, check=check, elapsed=round(elapsed, 6))},
        )
    return CellResult(
        check=check, passed=passed, exploratory=exploratory, detail=detail,
        elapsed=round(elapsed, 6), **cell,
    )


def equal_outcome(computed: PolyElement, expected: PolyElement) -> Outcome:
    if computed == expected:
        return True, None
    return False, f"{format_poly(computed)} != {format_poly(expected)}"


def membership_report(g: PolyElement, result: MembershipResult, ring: str) -> MembershipReport:
    return MembershipReport(
        query=to_terms(g),
        ring=ring,
        member=result.member,
        certificate=result.certificate.to_terms() if result.certificate else None,
    )


@dataclass
class ReductionReport:
    r: int
    d: int
    generator_keys: List[Key]
    classes: Dict[Key, PolyElement] = field(default_factory=dict)
    memberships: Dict[Key, MembershipResult] = field(default_factory=dict)

    @property
    def all_member(self) -> bool:
        return all(result.member for result in self.memberships.values())

    @property
    def violations(self) -> List[Key]:
        return [key for key, result in self.memberships.items() if not result.member]


@dataclass
class ConjectureReport:
    r: int
    d: int
    candidate_keys: List[Key]
    generated: bool
    minimal: Optional[bool]
    # the conjecture is stated for r >= 1
    applicable: bool
    missing: List[Key] = field(default_factory=list)
    redundant: List[Key] = field(default_factory=list)


def reduction_verify(r: int, d: int, threads: int = 1,
                     sign: RestrictionSign = PINNED_SIGN) -> ReductionReport:
    """Every alpha_{i,k} against the ideal of the prime-power fundamental classes, over Z."""
    require_odd(d)
    relations = compute_relation_set(r, d, threads=threads, sign=sign)
    ideal = reduced_ideal(relations)
    ideal.precompute({relations.classes[key].degree or 0 for key in relations.keys()}, threads)
    report = ReductionReport(r, d, reduced_keys(d))
    for key in relations.keys():
        report.classes[key] = relations[key]
        report.memberships[key] = membership(relations[key], ideal)
    if report.violations:
        logger.warning(f"⚠️ reduction fails for r={r}, d={d}: {report.violations}")
    return report


def conjecture_verify(r: int, d: int, weak: bool = False, threads: int = 1,
                      sign: RestrictionSign = PINNED_SIGN) -> ConjectureReport:
    """Generation (and, unless ``weak``, minimality) of the prime-divisor candidate set."""
    require_odd(d)
    relations = compute_relation_set(r, d, threads=threads, sign=sign)
    keys = conjecture_keys(d)
    candidate = GradedIdeal([relations[key] for key in keys], ZZ,
                            [relations.classes[key].label for key in keys])
    missing = [key for key in relations.keys() if not is_member(relations[key], candidate)]
    redundant: List[Key] = []
    minimal: Optional[bool] = None
    if not weak:
        redundant = [keys[j] for j in minimality_check(candidate, threads)]
        minimal = not redundant
    return ConjectureReport(r, d, keys, not missing, minimal, r >= 1, missing, redundant)


def _first_envelope_ideal(relations: RelationSet, domain) -> GradedIdeal:
    return GradedIdeal([relations[(1, 0)], relations[(1, 1)]], domain, ["alpha(1,0)", "alpha(1,1)"])


def rational_collapse(r: int, d: int, sign: RestrictionSign = PINNED_SIGN) -> Dict[int, bool]:
    """alpha_{i,0} in (alpha_{1,0}, alpha_{1,1}) over Q, for 1 < i <= d."""
    require_odd(d)
    keys = [(1, 0), (1, 1)] + [(i, 0) for i in range(2, d + 1)]
    relations = compute_relation_set(r, d, keys, sign=sign)
    ideal = _first_envelope_ideal(relations, QQ)
    return {i: is_member(relations[(i, 0)], ideal) for i in range(2, d + 1)}


def torsion_exploration(r: int, d: int, sign: RestrictionSign = PINNED_SIGN) -> Dict[int, bool]:
    """Whether i * alpha_{i,0} lies in (alpha_{1,0}, alpha_{1,1}) over Z, for 1 < i <= d."""
    require_odd(d)
    keys = [(1, 0), (1, 1)] + [(i, 0) for i in range(2, d + 1)]
    relations = compute_relation_set(r, d, keys, sign=sign)
    ideal = _first_envelope_ideal(relations, ZZ)
    return {i: is_member(relations[(i, 0)] * i, ideal) for i in range(2, d + 1)}


def grid_cells(r_values: Iterable[int], d_values: Iterable[int]) -> List[Tuple[int, int]]:
    return [(r, d) for d in sorted(set(d_values)) for r in sorted(set(r_values))]


class VerificationService:
    """Runs the verification suites with the configured threads and localization sign"""

    def __init__(self, settings: Optional[Settings] = None, threads: Optional[int] = None):
        self.settings = settings or get_settings()
        self.threads = threads or self.settings.effective_threads()
        self.sign = RestrictionSign(self.settings.compute.restriction_sign)
        self.check_euler = self.settings.compute.debug_euler

    def _ordered_map(self, worker: Callable[[T], R], items: Sequence[T]) -> List[R]:
        items = list(items)
        if self.threads > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                return list(pool.map(worker, items))
        return [worker(item) for item in items]

    def _map(self, worker: Callable[[T], List[CellResult]], items: Sequence[T]) -> List[CellResult]:
        return [cell for chunk in self._ordered_map(worker, items) for cell in chunk]

    def _inner_threads(self, cells: Sequence) -> int:
        # a single cell gets the pool, a grid parallelizes across cells
        return self.threads if len(cells) == 1 else 1

    def run(self, kind: VerifyKind, r_values: Sequence[int], d_values: Sequence[int],
            weak: bool = False) -> VerifyReport:
        handlers = {
            VerifyKind.CROSS: lambda: self.cross(r_values, d_values),
            VerifyKind.IDENTITIES: lambda: self.identities(r_values, d_values),
            VerifyKind.REDUCTION: lambda: self.reduction(r_values, d_values),
            VerifyKind.CONJECTURE: lambda: self.conjecture(r_values, d_values, weak),
            VerifyKind.RATIONAL: lambda: self.rational(r_values, d_values),
        }
        logger.info(f"🚀 verify {kind.value}: r in {sorted(set(r_values))}, d in {sorted(set(d_values))}")
        start = time.perf_counter()
        report = handlers[kind]()
        report.elapsed = round(time.perf_counter() - start, 6)
        marker = "✅" if report.passed else "❌"
        logger.info(f"{marker} verify {kind.value}: {len(report.cells)} checks, "
                    f"{len(report.failing)} failing in {report.elapsed:.3f}s")
        return report

    # cross-path suite

    def _cross_cell(self, cell: Tuple[int, int]) -> List[CellResult]:
        r, d = cell
        sign, euler = self.sign, self.check_euler
        rows: List[CellResult] = []
        for k in (0, 1):
            rows.append(run_check(
                "genfun-vs-recursion",
                lambda k=k: equal_outcome(genfun_alpha1(k, r, d), recursion_alpha1(k, r, d)),
                r=r, d=d, i=1, k=k,
            ))
            rows.append(run_check(
                "localization-vs-genfun",
                lambda k=k: equal_outcome(alpha_ik(1, k, r, d, sign, euler), genfun_alpha1(k, r, d)),
                r=r, d=d, i=1, k=k,
            ))
        rows.append(run_check(
            "hadamard-constant-entry",
            lambda: equal_outcome(hadamard_genfun_alpha0(r, d)[0], ZZ_CHERN.one),
            r=r, d=d, i=0, k=0,
        ))
        for i in range(1, d + 1):
            rows.append(run_check(
                "localization-vs-hadamard",
                lambda i=i: equal_outcome(alpha_i0(i, r, d, sign, euler), hadamard_genfun_alpha0(r, d)[i]),
                r=r, d=d, i=i, k=0,
            ))
            if r == 0:
                rows.append(run_check(
                    "binomial-degree",
                    lambda i=i: equal_outcome(alpha_i0(i, 0, d, sign, euler), ZZ_CHERN.ground_new(comb(d, i))),
                    r=0, d=d, i=i, k=0,
                ))
        if d == 1:
            rows.append(run_check("grassmannian", lambda: (grassmannian_check(r), None), r=r, d=1))
        return rows

    def _polynomiality_cell(self, cell: Tuple[int, int]) -> List[CellResult]:
        i, r = cell

        def test() -> Outcome:
            report = poly_in_d_check(i, r)
            return report.extra_points_match, "; ".join(report.mismatches) or None

        return [run_check("polynomiality-in-d", test, r=r, i=i, k=0)]

    @log_execution_time(logger)
    def cross(self, r_values: Sequence[int], d_values: Sequence[int]) -> VerifyReport:
        report = VerifyReport(kind=VerifyKind.CROSS)
        report.extend(self._map(self._cross_cell, grid_cells(r_values, d_values)))
        poly_cells = [
            (i, r) for r in sorted(set(r_values)) if r <= POLYNOMIALITY_MAX_R
            for i in range(1, POLYNOMIALITY_MAX_I + 1)
        ]
        report.extend(self._map(self._polynomiality_cell, poly_cells))
        return report

    # identities

    def _identities_cell(self, cell: Tuple[int, Tuple[int, ...]]) -> List[CellResult]:
        d, r_values = cell
        rows: List[CellResult] = []

        def claim() -> Outcome:
            claim_R_coefficients(d)
            return True, None

        rows.append(run_check("remainder-identities", claim, d=d))
        if d >= 3:
            rows.append(run_check("factorization", lambda: (factorization_identity(d), None), d=d))
        bound = max(r_values) + 1
        for path in Z1Path:
            rows.append(run_check(
                f"functional-equation-{path.value}",
                lambda path=path: _functional_outcome(d, bound, path), d=d,
            ))
        for r in r_values:
            rows.append(run_check("boundary-factor-divides", lambda r=r: _boundary_factor_outcome(r, d), r=r, d=d))
            rows.append(run_check(
                "presentation-relation-redundant",
                lambda r=r: (presentation_relation_redundant(r, d).member, None), r=r, d=d,
            ))
        return rows

    def _lemma_cell(self, cell: Tuple[int, int, int]) -> List[CellResult]:
        a, k, i = cell

        def test() -> Outcome:
            report = lemma_pushforward_check(a, k, i)
            return report.holds, None if report.holds else f"expected multiple {report.binomial}"

        return [run_check("pushforward-family", test, i=a, k=k, d=i)]

    @log_execution_time(logger)
    def identities(self, r_values: Sequence[int], d_values: Sequence[int]) -> VerifyReport:
        report = VerifyReport(kind=VerifyKind.IDENTITIES)
        r_tuple = tuple(sorted(set(r_values))) or (0,)
        d_sorted = sorted(set(d_values))
        report.extend(self._map(self._identities_cell, [(d, r_tuple) for d in d_sorted]))
        for i in range(max(d_sorted, default=1) + 1):
            report.cells.append(run_check(
                "euler-class", lambda i=i: (euler_class_check(i, self.sign), None), i=i,
            ))
        lemma_cells = [
            (a, k, i) for i in range(1, LEMMA_SUITE_MAX + 1) for a in range(i) for k in range(a + 1)
        ]
        report.extend(self._map(self._lemma_cell, lemma_cells))
        return report

    # reduction

    @log_execution_time(logger)
    def reduction(self, r_values: Sequence[int], d_values: Sequence[int]) -> VerifyReport:
        report = VerifyReport(kind=VerifyKind.REDUCTION)
        cells = grid_cells(r_values, d_values)
        inner = self._inner_threads(cells)

        def worker(cell: Tuple[int, int]) -> Tuple[List[CellResult], List[MembershipReport]]:
            r, d = cell
            start = time.perf_counter()
            try:
                result = reduction_verify(r, d, inner, self.sign)
            except ChowMapsError as e:
                return [CellResult(check="reduction-member", r=r, d=d, passed=False, detail=str(e))], []
            elapsed = round(time.perf_counter() - start, 6)
            rows = [
                CellResult(
                    check="reduction-member", r=r, d=d, i=i, k=k, passed=member.member,
                    detail=None if member.member else "not in the prime-power ideal", elapsed=elapsed,
                )
                for (i, k), member in result.memberships.items()
            ]
            certificates = [
                membership_report(result.classes[key], member, "Z")
                for key, member in result.memberships.items()
            ]
            return rows, certificates

        for rows, certificates in self._ordered_map(worker, cells):
            report.extend(rows)
            report.memberships.extend(certificates)
        return report

    # conjecture

    @log_execution_time(logger)
    def conjecture(self, r_values: Sequence[int], d_values: Sequence[int], weak: bool = False) -> VerifyReport:
        report = VerifyReport(kind=VerifyKind.CONJECTURE)
        cells = grid_cells(r_values, d_values)
        inner = self._inner_threads(cells)

        def worker(cell: Tuple[int, int]) -> List[CellResult]:
            r, d = cell
            start = time.perf_counter()
            try:
                result = conjecture_verify(r, d, weak, inner, self.sign)
            except ChowMapsError as e:
                return [CellResult(check="conjecture-generated", r=r, d=d, passed=False, detail=str(e))]
            elapsed = round(time.perf_counter() - start, 6)
            exploratory = not result.applicable
            rows = [CellResult(
                check="conjecture-generated", r=r, d=d, passed=result.generated, exploratory=exploratory,
                detail=f"missing {result.missing}" if result.missing else None, elapsed=elapsed,
            )]
            if result.minimal is not None:
                rows.append(CellResult(
                    check="conjecture-minimal", r=r, d=d, passed=result.minimal, exploratory=exploratory,
                    detail=f"redundant {result.redundant}" if result.redundant else None, elapsed=elapsed,
                ))
            return rows

        report.extend(self._map(worker, cells))
        for r, d in cells:
            if known_presentation(r, d) is not None:
                rows, certificates = self._presentation_cells(r, d)
                report.extend(rows)
                report.memberships.extend(certificates)
        if any(r == 0 for r in r_values):
            report.findings.append("r=0 lies outside the conjecture's range; its cells are recorded only")
        return report

    def _presentation_cells(self, r: int, d: int) -> Tuple[List[CellResult], List[MembershipReport]]:
        """Full alpha family against the closed-form presentation, plus the reduction table."""
        start = time.perf_counter()
        try:
            result = presentation_equality(r, d, self.threads, self.sign)
        except ChowMapsError as e:
            return [CellResult(check="presentation-equality", r=r, d=d, passed=False, detail=str(e))], []
        elapsed = round(time.perf_counter() - start, 6)
        rows = [CellResult(
            check="presentation-equality", r=r, d=d, passed=result.equal and result.certificates_agree,
            detail=None if result.equal else "the alpha family and the presentation differ", elapsed=elapsed,
        )]
        pairs = result.family_in_presentation + result.presentation_in_family
        if result.reduction is not None:
            rows.append(CellResult(
                check="reduction-table", r=r, d=d, i=2, k=0, passed=result.reduction_matches,
                detail=None if result.reduction_matches else "alpha(2,0) cofactors differ", elapsed=elapsed,
            ))
            pairs = pairs + [result.reduction]
        return rows, [membership_report(g, member, "Z") for g, member in pairs]

    # rational comparison and torsion

    def _rational_cell(self, cell: Tuple[int, int]) -> List[CellResult]:
        r, d = cell
        rows: List[CellResult] = []
        try:
            collapse = rational_collapse(r, d, self.sign)
            torsion = torsion_exploration(r, d, self.sign)
        except ChowMapsError as e:
            return [CellResult(check="rational-collapse", r=r, d=d, passed=False, detail=str(e))]
        for i, member in collapse.items():
            rows.append(CellResult(check="rational-collapse", r=r, d=d, i=i, k=0, passed=member, exploratory=True))
        for i, member in torsion.items():
            rows.append(CellResult(check="torsion-multiple", r=r, d=d, i=i, k=0, passed=member, exploratory=True))

        def pullback() -> Outcome:
            result = phi_pullback_check(r, d)
            return result.equal_over_Q, f"degree {result.degree_checked}, ratios {result.ratios}"

        rows.append(run_check("degree-one-comparison", pullback, exploratory=True, r=r, d=d))
        return rows

    @log_execution_time(logger)
    def rational(self, r_values: Sequence[int], d_values: Sequence[int]) -> VerifyReport:
        report = VerifyReport(kind=VerifyKind.RATIONAL)
        report.extend(self._map(self._rational_cell, grid_cells(r_values, d_values)))
        report.extend(self._torsion_witness())
        for cell in report.cells:
            if cell.exploratory and not cell.passed:
                report.findings.append(f"{cell.check} does not hold at r={cell.r}, d={cell.d}, i={cell.i}")
        return report

    def _torsion_witness(self) -> List[CellResult]:
        """alpha_{3,0} for (r, d) = (2, 3) is rationally but not integrally generated by the i = 1 classes."""
        rows: List[CellResult] = []

        def witness() -> Outcome:
            relations = compute_relation_set(2, 3, [(1, 0), (1, 1), (3, 0)], sign=self.sign)
            target = relations[(3, 0)]
            over_z = is_member(target, _first_envelope_ideal(relations, ZZ))
            over_q = is_member(target, _first_envelope_ideal(relations, QQ))
            return (not over_z and over_q), f"member over Z: {over_z}, over Q: {over_q}"

        def displayed_identity() -> Outcome:
            c1, c2 = ZZ_CHERN.gens
            ideal = GradedIdeal([9 * c1 ** 2 - 27 * c2, 27 * c1 * c2], ZZ)
            return is_member(3 * (6 * c1 ** 2 * c2 ** 2 + 9 * c2 ** 3), ideal), None

        rows.append(run_check("torsion-witness", witness, r=2, d=3, i=3, k=0))
        rows.append(run_check("torsion-witness-identity", displayed_identity, r=2, d=3))
        return rows


def _functional_outcome(d: int, bound: int, path: Z1Path) -> Outcome:
    report = functional_equation_check(d, bound, path)
    return report.holds, f"failing degrees {report.failing_degrees}" if not report.holds else None


def _boundary_factor_outcome(r: int, d: int) -> Outcome:
    """(H + d l1)(H + d l2) is d^2 c2 - (d^2 - 1)/4 c1^2 and its (r+1)-th power divides P_{r,d}."""
    c1, c2 = QQ_CHERN.gens
    factor = lemma_factor(d)
    expected = d ** 2 * c2 - (d ** 2 - 1) // 4 * c1 ** 2
    if factor != expected:
        return equal_outcome(factor, expected)
    poly_exact_div(symmetric_P(d, r), factor ** (r + 1))
    return True, None
