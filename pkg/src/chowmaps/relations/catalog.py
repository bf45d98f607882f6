"""
Production and oracle paths for every alpha_{i,k}^{r,d}, and the generator sets
built from them.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from sympy.polys.rings import PolyElement

from ..algebra.weights import require_odd
from ..core.exceptions import EnvelopeIndexError
from ..core.logging import get_logger
from ..ideals.binomials import prime_divisors, prime_powers_upto
from .first_envelope import genfun_alpha1, recursion_alpha1
from .localization import (
    PINNED_SIGN,
    Provenance,
    RelationSet,
    RestrictionSign,
    alpha_ik,
    hadamard_genfun_alpha0,
)

logger = get_logger("chowmaps.catalog")

Key = Tuple[int, int]


def validate_indices(i: int, k: int, d: int) -> None:
    require_odd(d)
    if not 1 <= i <= d:
        raise EnvelopeIndexError(f"Envelope index i={i} outside 1..d={d}", {"i": i, "d": d})
    if not 0 <= k <= i:
        raise EnvelopeIndexError(f"k={k} outside 0..i={i}", {"i": i, "k": k})


def production_alpha(i: int, k: int, r: int, d: int, sign: RestrictionSign = PINNED_SIGN,
                     check_euler: bool = False) -> Tuple[PolyElement, Provenance]:
    """alpha_{i,k}: generating functions for i = 1, localization otherwise."""
    validate_indices(i, k, d)
    if i == 1:
        return genfun_alpha1(k, r, d), Provenance.GENFUN
    return alpha_ik(i, k, r, d, sign, check_euler), Provenance.LOCALIZATION


def oracle_alpha(i: int, k: int, r: int, d: int) -> Optional[Tuple[PolyElement, Provenance]]:
    """An independent computation of alpha_{i,k} when one exists."""
    validate_indices(i, k, d)
    if i == 1:
        return recursion_alpha1(k, r, d), Provenance.RECURSION
    if k == 0:
        return hadamard_genfun_alpha0(r, d)[i], Provenance.HADAMARD
    return None


def all_keys(d: int) -> List[Key]:
    return [(i, k) for i in range(1, d + 1) for k in range(i + 1)]


def reduced_keys(d: int) -> List[Key]:
    """alpha_{1,0}, alpha_{1,1} and alpha_{q,0} for prime powers q <= d."""
    return [(1, 0), (1, 1)] + [(q, 0) for q in prime_powers_upto(d)]


def conjecture_keys(d: int) -> List[Key]:
    """alpha_{1,0}, alpha_{1,1} and alpha_{p,0} for primes p dividing d."""
    return [(1, 0), (1, 1)] + [(p, 0) for p in prime_divisors(d)]


def compute_relation_set(
    r: int,
    d: int,
    keys: Optional[List[Key]] = None,
    threads: int = 1,
    sign: RestrictionSign = PINNED_SIGN,
    check_euler: bool = False,
) -> RelationSet:
    """Evaluate the production path for ``keys`` (default: every (i, k)), in parallel."""
    require_odd(d)
    keys = all_keys(d) if keys is None else keys

    def compute(key: Key) -> Tuple[PolyElement, Provenance]:
        return production_alpha(key[0], key[1], r, d, sign, check_euler)

    if threads > 1 and len(keys) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(compute, keys))
    else:
        results = [compute(key) for key in keys]

    relations = RelationSet(r, d)
    for (i, k), (poly, provenance) in zip(keys, results):
        relations.add(i, k, poly, provenance)
    logger.debug(f"computed {len(keys)} relation classes for r={r}, d={d}")
    return relations
