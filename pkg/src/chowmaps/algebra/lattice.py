"""
Row lattices in Z^N (or subspaces of Q^N) kept in Hermite normal form.

Rows are inserted one at a time. Every basis row remembers how it is built
from the inserted rows, so membership queries come with a certificate.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ

Combo = Dict[Hashable, object]


def py_xgcd(a, b):
    # Maintain the invariants:
    #          x * a +      y * b ==      g
    #     next_x * a + next_y * b == next_g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _axpy(target: Combo, scale, source: Combo) -> Combo:
    """target + scale * source on sparse combinations."""
    if not scale:
        return target
    out = dict(target)
    for key, value in source.items():
        total = out.get(key, 0) + scale * value
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def _mix(first: Combo, a, second: Combo, b) -> Combo:
    """a * first + b * second."""
    out = {key: a * value for key, value in first.items() if a * value}
    return _axpy(out, b, second)


class HermiteLattice:
    """Row lattice with unique Hermite normal form and a transformation record.

    Over ZZ the basis is the row-style HNF: positive pivots, entries above a
    pivot reduced into [0, pivot). Over QQ it is the reduced row echelon form.
    """

    __slots__ = ["N", "domain", "basis", "combos", "pivots", "pivot_location_in_column"]

    def __init__(self, ambient_dimension: int, domain=ZZ):
        if domain not in (ZZ, QQ):
            raise ValueError(f"unsupported coefficient domain {domain}")
        self.N = ambient_dimension
        self.domain = domain
        self.basis: List[list] = []
        self.combos: List[Combo] = []
        self.pivots: List[int] = []
        self.pivot_location_in_column: List[Optional[int]] = [None] * ambient_dimension

    @property
    def is_field(self) -> bool:
        return self.domain == QQ

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _coerce(self, vec: Sequence) -> list:
        if len(vec) != self.N:
            raise ValueError(f"expected a vector of length {self.N}, got {len(vec)}")
        return [self.domain.convert(v) for v in vec]

    def __contains__(self, vec: Sequence) -> bool:
        return self._reduce(self._coerce(vec), None) is not None

    def solve(self, vec: Sequence) -> Optional[Combo]:
        """Combination of inserted rows equal to ``vec``, or None."""
        return self._reduce(self._coerce(vec), {})

    def _reduce(self, vec: list, combo: Optional[Combo]) -> Optional[Combo]:
        col_piv = self.pivot_location_in_column
        for j in range(self.N):
            b = vec[j]
            if not b:
                continue
            p = col_piv[j]
            if p is None:
                return None
            row = self.basis[p]
            a = row[j]
            if self.is_field:
                q = b / a
            elif b % a:
                return None
            else:
                q = b // a
            for jj in range(j, self.N):
                vec[jj] -= q * row[jj]
            if combo is not None:
                combo = _axpy(combo, q, self.combos[p])
        return {} if combo is None else combo

    def add_vector(self, vec0: Sequence, label: Hashable) -> bool:
        """Insert a row tagged ``label``; returns whether the lattice grew."""
        vec = self._coerce(vec0)
        if not any(vec):
            return False
        if self._reduce(list(vec), None) is not None:
            return False
        combo: Combo = {label: self.domain.one}
        col_piv = self.pivot_location_in_column
        for j in range(self.N):
            if not vec[j]:
                continue
            p = col_piv[j]
            if p is None:
                where = bisect_left(self.pivots, j)
                self.basis.insert(where, vec)
                self.combos.insert(where, combo)
                self.pivots.insert(where, j)
                for ii in range(where, len(self.pivots)):
                    col_piv[self.pivots[ii]] = ii
                break
            row = self.basis[p]
            a, b = row[j], vec[j]
            if self.is_field:
                q = b / a
                vec = [v - q * w for v, w in zip(vec, row)]
                combo = _axpy(combo, -q, self.combos[p])
            elif b % a == 0:
                q = b // a
                vec = [v - q * w for v, w in zip(vec, row)]
                combo = _axpy(combo, -q, self.combos[p])
            else:
                # unimodular 2x2 step puts gcd(a, b) on the pivot
                x, y, g = py_xgcd(a, b)
                ag, mbg = a // g, -b // g
                new_row = [x * w + y * v for w, v in zip(row, vec)]
                vec = [mbg * w + ag * v for w, v in zip(row, vec)]
                new_combo = _mix(self.combos[p], x, combo, y)
                combo = _mix(self.combos[p], mbg, combo, ag)
                self.basis[p], self.combos[p] = new_row, new_combo
        self._normalize()
        return True

    def _normalize(self) -> None:
        for p, j in enumerate(self.pivots):
            row = self.basis[p]
            if self.is_field and row[j] != 1:
                scale = 1 / row[j]
                self.basis[p] = [scale * v for v in row]
                self.combos[p] = {k: scale * v for k, v in self.combos[p].items()}
            elif not self.is_field and row[j] < 0:
                self.basis[p] = [-v for v in row]
                self.combos[p] = {k: -v for k, v in self.combos[p].items()}
        for p, j in enumerate(self.pivots):
            pivot_row = self.basis[p]
            a = pivot_row[j]
            for u in range(p):
                above = self.basis[u]
                if not above[j]:
                    continue
                q = above[j] / a if self.is_field else above[j] // a
                if q:
                    self.basis[u] = [v - q * w for v, w in zip(above, pivot_row)]
                    self.combos[u] = _axpy(self.combos[u], -q, self.combos[p])

    def hnf(self) -> Tuple[Tuple, ...]:
        return tuple(tuple(row) for row in self.basis)
