"""
Exact polynomial and truncated power series arithmetic.

Polynomials are sympy ``PolyElement`` values in fixed, cached rings. Chern
polynomials live in ``ZZ_CHERN`` or ``QQ_CHERN`` (variables c1 of weight 1 and
c2 of weight 2); the two rings are distinct, so mixing them is an error and
crossing between them goes through ``promote``/``demote``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from sympy.polys.domains import QQ, ZZ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..core.exceptions import DemotionError, NotDivisibleError, NotInvertibleError

ChernPoly = PolyElement
Variable = Union[PolyElement, str, int]

ZZ_CHERN = ring("c1,c2", ZZ, grlex)[0]
QQ_CHERN = ZZ_CHERN.clone(domain=QQ)

VARIABLE_WEIGHTS: Dict[str, int] = {"c1": 1, "c2": 2}

_UNICODE_NAMES = {"c1": "c₁", "c2": "c₂", "l1": "l₁", "l2": "l₂"}
_LATEX_NAMES = {"c1": "c_1", "c2": "c_2", "l1": "l_1", "l2": "l_2", "h": "h", "H": "H"}
_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def chern_ring(domain=ZZ) -> PolyRing:
    return ZZ_CHERN if domain == ZZ else QQ_CHERN


def chern_gens(domain=ZZ) -> Tuple[PolyElement, PolyElement]:
    return chern_ring(domain).gens


def ring_weights(poly_ring: PolyRing) -> Tuple[int, ...]:
    """Grading weight of each generator of ``poly_ring``."""
    return tuple(VARIABLE_WEIGHTS.get(str(s), 1) for s in poly_ring.symbols)


def monomial_degree(monom: Sequence[int], weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(monom, weights))


def _same_ring(a: PolyElement, b: PolyElement, op: str) -> None:
    if a.ring != b.ring:
        raise TypeError(f"{op}: operands live in different rings ({a.ring} vs {b.ring})")


def _gen_index(poly_ring: PolyRing, var: Variable) -> int:
    if isinstance(var, str):
        names = [str(s) for s in poly_ring.symbols]
        if var not in names:
            raise ValueError(f"{var!r} is not a generator of {poly_ring}")
        return names.index(var)
    return poly_ring.index(var)


def poly_mul(a: ChernPoly, b: ChernPoly) -> ChernPoly:
    _same_ring(a, b, "poly_mul")
    return a * b


def poly_exact_div(a: ChernPoly, b: ChernPoly) -> ChernPoly:
    """Return q with a = q*b, or raise NotDivisibleError."""
    _same_ring(a, b, "poly_exact_div")
    if not b:
        raise ZeroDivisionError("poly_exact_div by zero polynomial")
    try:
        return a.exquo(b)
    except ExactQuotientFailed:
        raise NotDivisibleError(
            "Division leaves a remainder",
            {"dividend": format_poly(a), "divisor": format_poly(b)},
        )


def substitute(p: PolyElement, var: Variable, value: PolyElement) -> PolyElement:
    """Replace ``var`` by ``value`` in ``p``.

    When ``value`` lives in another ring the result lands in ``value.ring``,
    which must contain every other variable of ``p`` (matched by name).
    """
    index = _gen_index(p.ring, var)
    if value.ring == p.ring:
        return p.compose(p.ring.gens[index], value)

    target = value.ring
    names = [str(s) for s in target.symbols]
    positions = []
    for k, symbol in enumerate(p.ring.symbols):
        if k == index:
            continue
        if str(symbol) not in names:
            raise ValueError(f"{symbol} is missing from target ring {target}")
        positions.append((k, names.index(str(symbol))))

    powers: Dict[int, PolyElement] = {0: target.one}
    result = target.zero
    for monom, coeff in p.terms():
        e = monom[index]
        if e not in powers:
            powers[e] = value ** e
        shifted = [0] * target.ngens
        for k, t in positions:
            shifted[t] = monom[k]
        term = target.term_new(tuple(shifted), target.domain.convert_from(coeff, p.ring.domain))
        result += term * powers[e]
    return result


def grade_component(p: PolyElement, degree: int) -> PolyElement:
    """Sum of the terms of weighted degree exactly ``degree``."""
    weights = ring_weights(p.ring)
    return p.ring.from_dict(
        {m: c for m, c in p.items() if monomial_degree(m, weights) == degree}
    )


def homogeneous_components(p: PolyElement) -> Dict[int, PolyElement]:
    weights = ring_weights(p.ring)
    buckets: Dict[int, dict] = {}
    for m, c in p.items():
        buckets.setdefault(monomial_degree(m, weights), {})[m] = c
    return {deg: p.ring.from_dict(terms) for deg, terms in sorted(buckets.items())}


def homogeneous_degree(p: PolyElement) -> Union[int, None]:
    """Weighted degree of a nonzero homogeneous ``p``; None if inhomogeneous or zero."""
    weights = ring_weights(p.ring)
    degrees = {monomial_degree(m, weights) for m in p}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def is_homogeneous(p: PolyElement) -> bool:
    return not p or homogeneous_degree(p) is not None


def promote(p: PolyElement) -> PolyElement:
    """Lossless Z -> Q coefficient change."""
    if p.ring.domain == QQ:
        return p
    return p.set_ring(p.ring.clone(domain=QQ))


def demote(p: PolyElement) -> PolyElement:
    """Checked Q -> Z coefficient change."""
    if p.ring.domain == ZZ:
        return p
    target = p.ring.clone(domain=ZZ)
    terms = {}
    for monom, coeff in p.items():
        if QQ.denom(coeff) != 1:
            raise DemotionError(
                f"Coefficient {coeff} of {format_poly(p)} is not an integer",
                {"monomial": list(monom)},
            )
        terms[monom] = ZZ(int(QQ.numer(coeff)))
    return target.from_dict(terms)


@dataclass(frozen=True)
class TruncatedSeries:
    """Polynomial with every term of weighted degree above ``bound`` dropped."""

    poly: PolyElement
    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("truncation bound must be non-negative")
        weights = ring_weights(self.poly.ring)
        if any(monomial_degree(m, weights) > self.bound for m in self.poly):
            object.__setattr__(self, "poly", self.poly.ring.from_dict(
                {m: c for m, c in self.poly.items() if monomial_degree(m, weights) <= self.bound}
            ))

    @property
    def ring(self) -> PolyRing:
        return self.poly.ring

    def _check(self, other: "TruncatedSeries") -> int:
        _same_ring(self.poly, other.poly, "TruncatedSeries")
        return min(self.bound, other.bound)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.poly + other.poly, self._check(other))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.poly - other.poly, self._check(other))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.poly * other.poly, self._check(other))

    def scale(self, factor: PolyElement) -> "TruncatedSeries":
        return TruncatedSeries(self.poly * factor, self.bound)

    def component(self, degree: int) -> PolyElement:
        if degree > self.bound:
            raise ValueError(f"degree {degree} exceeds truncation bound {self.bound}")
        return grade_component(self.poly, degree)

    def constant_term(self):
        return self.poly.get(self.poly.ring.zero_monom, self.poly.ring.domain.zero)


def series_invert(u: TruncatedSeries) -> TruncatedSeries:
    """Inverse of ``u`` up to its bound, built one homogeneous degree at a time."""
    domain = u.ring.domain
    u0 = u.constant_term()
    if not u0 or (not domain.is_Field and abs(u0) != 1):
        raise NotInvertibleError(
            f"Constant term {u0} is not a unit in {domain}",
            {"series": format_poly(u.poly), "bound": u.bound},
        )
    inverse_u0 = domain.exquo(domain.one, u0)
    parts = homogeneous_components(u.poly)
    pieces: List[PolyElement] = [u.ring.ground_new(inverse_u0)]
    for degree in range(1, u.bound + 1):
        acc = u.ring.zero
        for e in range(1, degree + 1):
            ue = parts.get(e)
            if ue:
                acc += ue * pieces[degree - e]
        pieces.append(acc.mul_ground(-inverse_u0))
    return TruncatedSeries(sum(pieces, u.ring.zero), u.bound)


def chern_sort_key(monom: Sequence[int], weights: Sequence[int]) -> Tuple:
    # graded, then the earliest variable's exponent descending
    return (monomial_degree(monom, weights), tuple(-e for e in monom))


def sorted_terms(p: PolyElement) -> List[Tuple[Tuple[int, ...], object]]:
    weights = ring_weights(p.ring)
    return sorted(p.items(), key=lambda item: chern_sort_key(item[0], weights))


def to_terms(p: PolyElement) -> List[list]:
    """JSON-ready ``[[coeff_string, e1, e2, ...], ...]`` in canonical order."""
    return [[str(coeff), *map(int, monom)] for monom, coeff in sorted_terms(p)]


def _parse_coeff(text: str, domain):
    if "/" in text:
        num, den = text.split("/")
        return domain.convert_from(QQ(int(num), int(den)), QQ)
    return domain(int(text))


def from_terms(terms: Iterable[Sequence], poly_ring: PolyRing = ZZ_CHERN) -> PolyElement:
    result = {}
    for entry in terms:
        coeff, monom = entry[0], tuple(int(e) for e in entry[1:])
        if len(monom) != poly_ring.ngens:
            raise ValueError(f"term {entry!r} does not match {poly_ring.ngens} generators")
        value = _parse_coeff(str(coeff), poly_ring.domain)
        if value:
            result[monom] = result.get(monom, poly_ring.domain.zero) + value
    return poly_ring.from_dict(result)


def _format_monomial(names: Sequence[str], monom: Sequence[int], style: str) -> str:
    parts = []
    for name, e in zip(names, monom):
        if not e:
            continue
        if style == "latex":
            symbol = _LATEX_NAMES.get(name, name)
            parts.append(symbol if e == 1 else f"{symbol}^{{{e}}}")
        elif style == "ascii":
            parts.append(name if e == 1 else f"{name}^{e}")
        else:
            symbol = _UNICODE_NAMES.get(name, name)
            parts.append(symbol if e == 1 else symbol + str(e).translate(_SUPERSCRIPTS))
    return ("" if style != "ascii" else "*").join(parts)


def format_poly(p: PolyElement, style: str = "text") -> str:
    """Render ``p`` as ``text`` (unicode), ``latex`` or ``ascii``.

    Terms appear by ascending degree, and within a degree by descending
    exponent of the first variable, so homogeneous output reads 9c₁² − 27c₂.
    """
    if not p:
        return "0"
    names = [str(s) for s in p.ring.symbols]
    minus = " − " if style == "text" else " - "
    out = []
    for k, (monom, coeff) in enumerate(sorted_terms(p)):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        body = _format_monomial(names, monom, style)
        if style == "latex" and QQ.denom(magnitude) != 1:
            scalar = f"\\frac{{{QQ.numer(magnitude)}}}{{{QQ.denom(magnitude)}}}"
        else:
            scalar = str(magnitude)
        if body:
            if magnitude == 1:
                text = body
            else:
                text = f"{scalar}*{body}" if style == "ascii" else f"{scalar}{body}"
        else:
            text = scalar
        if k == 0:
            out.append(("-" if style != "text" else "−") + text if negative else text)
        else:
            out.append((minus if negative else " + ") + text)
    return "".join(out)
