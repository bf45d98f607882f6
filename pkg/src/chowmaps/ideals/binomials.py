"""
gcd of the binomials C(i, a), 0 < a < i.

By Lucas's theorem the gcd is p when i = p^k and 1 otherwise; both sides are
computed and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import comb, gcd
from typing import List, Optional

from sympy.ntheory.factor_ import factorint, primefactors

from ..core.exceptions import DomainError, IdentityViolatedError


@dataclass(frozen=True)
class BinomialGcd:
    i: int
    gcd: int
    is_prime_power: bool
    p: Optional[int] = None


def prime_power_base(n: int) -> Optional[int]:
    """p if n = p^k with k >= 1, else None."""
    if n < 2:
        return None
    factors = factorint(n)
    if len(factors) != 1:
        return None
    return next(iter(factors))


def binomial_gcd(i: int) -> BinomialGcd:
    if i < 2:
        raise DomainError(f"binomial_gcd needs i >= 2, got {i}", {"i": i})
    value = reduce(gcd, (comb(i, a) for a in range(1, i)))
    p = prime_power_base(i)
    expected = p if p is not None else 1
    if value != expected:
        raise IdentityViolatedError(
            f"gcd of C({i}, a) is {value}, prime-power structure predicts {expected}",
            {"i": i, "gcd": value, "p": p},
        )
    return BinomialGcd(i, value, p is not None, p)


def prime_powers_upto(d: int) -> List[int]:
    """Envelope indices 2 <= i <= d that are prime powers."""
    return [i for i in range(2, d + 1) if prime_power_base(i) is not None]


def prime_divisors(d: int) -> List[int]:
    return list(primefactors(d)) if d > 1 else []
