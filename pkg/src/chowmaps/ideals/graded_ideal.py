"""
Homogeneous ideals of Z[c1, c2] and Q[c1, c2], decided one degree slice at a time.

Degree D of the ring is free with basis c1^(D-2b) c2^b, b = 0..D//2. The
degree-D part of an ideal is the lattice spanned by the monomial multiples of
its generators that land in degree D, so membership of a homogeneous element
is a linear problem in a single slice.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ
from sympy.polys.rings import PolyElement

from ..algebra.lattice import HermiteLattice
from ..algebra.poly_core import (
    chern_ring,
    demote,
    format_poly,
    homogeneous_degree,
    promote,
    to_terms,
)
from ..core.exceptions import IdentityViolatedError, NotHomogeneousError
from ..core.logging import get_logger

logger = get_logger("chowmaps.graded_ideal")

RowLabel = Tuple[int, Tuple[int, int]]


def slice_monomials(degree: int) -> List[Tuple[int, int]]:
    """Basis exponents (e1, e2) of degree ``degree``, c1 exponent descending."""
    return [(degree - 2 * b, b) for b in range(degree // 2 + 1)]


def coordinates(p: PolyElement, degree: int) -> List:
    return [p.get(monom, p.ring.domain.zero) for monom in slice_monomials(degree)]


@dataclass
class DegreeSlice:
    degree: int
    monomials: List[Tuple[int, int]]
    rows: List[RowLabel]
    lattice: HermiteLattice

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    @property
    def hnf(self) -> Tuple[Tuple, ...]:
        return self.lattice.hnf()

    def is_full(self) -> bool:
        """Whether the slice lattice is all of the degree-D part."""
        if self.lattice.rank != self.dimension:
            return False
        if self.lattice.is_field:
            return True
        return all(self.hnf[p][p] == 1 for p in range(self.dimension))


@dataclass
class MembershipCertificate:
    """Cofactors q_j with g = sum q_j gen_j."""
    cofactors: List[PolyElement]

    def to_terms(self) -> List[List[list]]:
        return [to_terms(q) for q in self.cofactors]


@dataclass
class MembershipResult:
    member: bool
    degree: Optional[int]
    certificate: Optional[MembershipCertificate] = None


class GradedIdeal:
    """Finitely generated homogeneous ideal with lazily built degree slices.

    Generator order is preserved; certificates index into it.
    """

    def __init__(self, generators: Iterable[PolyElement], domain=ZZ, labels: Sequence[str] = None):
        self.domain = domain
        self.ring = chern_ring(domain)
        self.generators: List[PolyElement] = [self.coerce(g) for g in generators]
        self.labels = list(labels) if labels is not None else [f"g{j}" for j in range(len(self.generators))]
        self.degrees: List[Optional[int]] = []
        for j, g in enumerate(self.generators):
            degree = homogeneous_degree(g)
            if g and degree is None:
                raise NotHomogeneousError(
                    f"Generator {j} is not homogeneous", {"generator": format_poly(g)}
                )
            self.degrees.append(degree)
        self._slices: Dict[int, DegreeSlice] = {}
        self._lock = threading.Lock()
        self._degree_locks: Dict[int, threading.Lock] = {}

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        ring = "Z" if self.domain == ZZ else "Q"
        return f"GradedIdeal({ring}; {', '.join(format_poly(g) for g in self.generators)})"

    def coerce(self, g: PolyElement) -> PolyElement:
        if g.ring == self.ring:
            return g
        return promote(g) if self.domain == QQ else demote(g)

    def with_generators(self, generators: Iterable[PolyElement]) -> "GradedIdeal":
        return GradedIdeal(list(self.generators) + list(generators), self.domain)

    def without(self, index: int) -> "GradedIdeal":
        kept = [g for j, g in enumerate(self.generators) if j != index]
        return GradedIdeal(kept, self.domain)

    def max_degree(self) -> int:
        return max((deg for deg in self.degrees if deg is not None), default=0)

    def slice(self, degree: int) -> DegreeSlice:
        """The degree-D slice, built at most once per degree."""
        cached = self._slices.get(degree)
        if cached is not None:
            return cached
        with self._lock:
            degree_lock = self._degree_locks.setdefault(degree, threading.Lock())
        with degree_lock:
            cached = self._slices.get(degree)
            if cached is None:
                cached = slice_basis(self, degree)
                self._slices[degree] = cached
            return cached

    def precompute(self, degrees: Iterable[int], threads: int = 1) -> None:
        """Build several slices, in parallel when threads > 1."""
        pending = sorted({deg for deg in degrees if deg not in self._slices})
        if not pending:
            return
        if threads <= 1:
            for degree in pending:
                self.slice(degree)
            return
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(self.slice, pending))


def slice_basis(ideal: GradedIdeal, degree: int) -> DegreeSlice:
    """All products m * g_j of degree ``degree`` and the HNF of their span."""
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    monomials = slice_monomials(degree)
    lattice = HermiteLattice(len(monomials), ideal.domain)
    rows: List[RowLabel] = []
    for j, (g, g_degree) in enumerate(zip(ideal.generators, ideal.degrees)):
        if not g or g_degree is None or g_degree > degree:
            continue
        for multiplier in slice_monomials(degree - g_degree):
            label = (j, multiplier)
            rows.append(label)
            product = g * ideal.ring.from_dict({multiplier: ideal.domain.one})
            lattice.add_vector(coordinates(product, degree), label)
    logger.debug(f"slice D={degree}: {len(rows)} rows, rank {lattice.rank}/{len(monomials)}")
    return DegreeSlice(degree, monomials, rows, lattice)


def membership(g: PolyElement, ideal: GradedIdeal) -> MembershipResult:
    """Decide g in ideal exactly; a positive answer carries a re-verified certificate."""
    g = ideal.coerce(g)
    zero_cert = MembershipCertificate([ideal.ring.zero for _ in ideal.generators])
    if not g:
        return MembershipResult(True, None, zero_cert)
    degree = homogeneous_degree(g)
    if degree is None:
        raise NotHomogeneousError("Membership query is not homogeneous", {"query": format_poly(g)})

    combo = ideal.slice(degree).lattice.solve(coordinates(g, degree))
    if combo is None:
        return MembershipResult(False, degree)

    cofactors = [ideal.ring.zero for _ in ideal.generators]
    for (j, multiplier), coeff in combo.items():
        cofactors[j] += ideal.ring.from_dict({multiplier: coeff})
    rebuilt = sum((q * gen for q, gen in zip(cofactors, ideal.generators)), ideal.ring.zero)
    if rebuilt != g:
        raise IdentityViolatedError(
            "Membership certificate does not reproduce the query",
            {"query": format_poly(g), "rebuilt": format_poly(rebuilt)},
        )
    return MembershipResult(True, degree, MembershipCertificate(cofactors))


def is_member(g: PolyElement, ideal: GradedIdeal) -> bool:
    return membership(g, ideal).member


def ideal_equal(first: GradedIdeal, second: GradedIdeal) -> bool:
    if first.domain != second.domain:
        raise TypeError("ideal_equal needs both ideals over the same ring")
    return all(is_member(g, second) for g in first.generators) and all(
        is_member(g, first) for g in second.generators
    )


def minimality_check(ideal: GradedIdeal, threads: int = 1) -> List[int]:
    """Indices j with gen_j in the ideal of the other generators, each tested on its own."""
    def redundant(j: int) -> bool:
        return is_member(ideal.generators[j], ideal.without(j))

    indices = range(len(ideal.generators))
    if threads > 1 and len(ideal.generators) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(redundant, indices))
    else:
        flags = [redundant(j) for j in indices]
    return [j for j, flag in zip(indices, flags) if flag]


@dataclass
class IdealComparison:
    equal: bool
    missing_from_second: List[int] = field(default_factory=list)
    missing_from_first: List[int] = field(default_factory=list)


def compare_ideals(first: GradedIdeal, second: GradedIdeal) -> IdealComparison:
    """ideal_equal with the offending generator indices on each side."""
    left = [j for j, g in enumerate(first.generators) if not is_member(g, second)]
    right = [j for j, g in enumerate(second.generators) if not is_member(g, first)]
    return IdealComparison(not left and not right, left, right)
