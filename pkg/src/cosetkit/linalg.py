"""Exact incremental row echelon form over Q.

Rows are scaled to primitive integer vectors before insertion, so elimination
runs on Python ints (fraction-free) while row spaces stay those of the
rational input.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        row = [x // g for x in row]
    return row


def integer_row(values: Sequence) -> list[int]:
    """Scale a rational vector by the lcm of its denominators."""
    fracs = [Fraction(v) for v in values]
    den = 1
    for f in fracs:
        if f.denominator != 1:
            den = lcm(den, f.denominator)
    return [int(f * den) for f in fracs]


class Echelon:
    """Row-echelon basis of a growing subspace of Q^width."""

    def __init__(self, width: int):
        self.width = width
        self._rows: list[tuple[int, list[int]]] = []  # (pivot, row), sorted by pivot

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, row: list[int]) -> list[int]:
        for pivot, basis in self._rows:
            x = row[pivot]
            if x:
                g = gcd(basis[pivot], x)
                p, x = basis[pivot] // g, x // g
                row = _primitive([p * a - x * b for a, b in zip(row, basis)])
        return row

    def reduce(self, values: Sequence) -> list[int]:
        if len(values) != self.width:
            raise ValueError(f"expected a vector of length {self.width}")
        return _primitive(self._reduce(integer_row(values)))

    def insert(self, values: Sequence) -> bool:
        """Add a vector; return True iff it enlarged the span."""
        row = self.reduce(values)
        for lead, x in enumerate(row):
            if x:
                break
        else:
            return False
        if row[lead] < 0:
            row = [-x for x in row]
        pos = 0
        while pos < len(self._rows) and self._rows[pos][0] < lead:
            pos += 1
        self._rows.insert(pos, (lead, row))
        return True

    def contains(self, values: Sequence) -> bool:
        return not any(self.reduce(values))

    def rows(self) -> list[list[int]]:
        return [list(r) for _, r in self._rows]


def rank(rows: Iterable[Sequence], width: int | None = None, stop_at: int | None = None) -> int:
    """Exact rank of a rational matrix given by rows; optionally stop once ``stop_at`` is reached."""
    ech = None
    for row in rows:
        if ech is None:
            ech = Echelon(width if width is not None else len(row))
        ech.insert(row)
        if stop_at is not None and ech.rank >= stop_at:
            break
    return 0 if ech is None else ech.rank


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_add(a, b, sb=1):
    return [[x + sb * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def nullity(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(matrix[0]) - rank(matrix)


def transpose(a):
    return [list(col) for col in zip(*a)]
