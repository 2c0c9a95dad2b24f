"""Unitary Virasoro minimal models L(c_m, h_{r,s}).

Series index m >= 1 gives central charge c_m = 1 - 6/((m+2)(m+3)); the Kac
labels run over 1 <= r <= m+1, 1 <= s <= m+2 with the identification
(r, s) ~ (m+2-r, m+3-s).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from math import prod
from typing import Iterable, Iterator

from .errors import BadIndex
from .exactq import QSeries, euler_inverse

Pair = tuple[int, int]


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise BadIndex(f"series index m must be a positive integer, got {m!r}")


def _check_pair(m: int, pair: Pair) -> None:
    r, s = pair
    if not (1 <= r <= m + 1 and 1 <= s <= m + 2):
        raise BadIndex(f"(r, s) = {pair} outside 1 <= r <= {m + 1}, 1 <= s <= {m + 2}")


def conjugate_pair(m: int, pair: Pair) -> Pair:
    r, s = pair
    return (m + 2 - r, m + 3 - s)


@dataclass(frozen=True, order=True)
class MinimalLabel:
    """Canonical Kac label: the smaller of (r, s) and its conjugate."""

    m: int
    r: int
    s: int

    def __post_init__(self):
        _check_m(self.m)
        _check_pair(self.m, (self.r, self.s))
        canon = min((self.r, self.s), conjugate_pair(self.m, (self.r, self.s)))
        object.__setattr__(self, "r", canon[0])
        object.__setattr__(self, "s", canon[1])

    @property
    def pair(self) -> Pair:
        return (self.r, self.s)

    @property
    def representatives(self) -> tuple[Pair, ...]:
        conj = conjugate_pair(self.m, self.pair)
        return (self.pair,) if conj == self.pair else (self.pair, conj)

    @property
    def weight(self) -> Fraction:
        return conformal_weight(self)

    def __str__(self):
        return f"({self.r},{self.s})"


def labels(m: int) -> list[MinimalLabel]:
    """All distinct irreducible modules of L(c_m, 0), sorted by canonical pair."""
    _check_m(m)
    seen = {MinimalLabel(m, r, s) for r in range(1, m + 2) for s in range(1, m + 3)}
    return sorted(seen)


def central_charge(m: int) -> Fraction:
    _check_m(m)
    return 1 - Fraction(6, (m + 2) * (m + 3))


def conformal_weight(label: MinimalLabel | tuple) -> Fraction:
    """h_{r,s}^{(m)} = ([r(m+3) - s(m+2)]^2 - 1) / (4(m+2)(m+3))."""
    if isinstance(label, MinimalLabel):
        m, r, s = label.m, label.r, label.s
    else:
        m, r, s = label
        _check_m(m)
        _check_pair(m, (r, s))
    return Fraction((r * (m + 3) - s * (m + 2)) ** 2 - 1, 4 * (m + 2) * (m + 3))


def is_admissible(m: int, a: Pair, b: Pair, c: Pair) -> bool:
    """The admissible-triple predicate on ((r,s), (r',s'), (r'',s''))."""
    _check_m(m)
    for pair in (a, b, c):
        _check_pair(m, pair)
    (r1, s1), (r2, s2), (r3, s3) = a, b, c
    rsum, ssum = r1 + r2 + r3, s1 + s2 + s3
    return (
        rsum <= 2 * m + 3
        and ssum <= 2 * m + 5
        and r1 < r2 + r3
        and r2 < r1 + r3
        and r3 < r1 + r2
        and s1 < s2 + s3
        and s2 < s1 + s3
        and s3 < s1 + s2
        and rsum % 2 == 1
        and ssum % 2 == 1
    )


def _as_pair(m: int, x) -> Pair:
    if isinstance(x, MinimalLabel):
        if x.m != m:
            raise BadIndex(f"label {x} belongs to series {x.m}, not {m}")
        return x.pair
    pair = (int(x[0]), int(x[1]))
    _check_pair(m, pair)
    return pair


def fusion_dim(m: int, out, left, right) -> int:
    """dim I(out; left, right) for L(c_m, 0)-modules.

    A module has two Kac representatives; the fusion dimension is 1 exactly
    when some choice of representatives forms an admissible triple
    (left, right, out).
    """
    pairs = [_as_pair(m, x) for x in (left, right, out)]
    choices = [(p, conjugate_pair(m, p)) for p in pairs]
    return int(any(is_admissible(m, a, b, c) for a, b, c in cartesian(*choices)))


def fusion_rules(m: int) -> dict[tuple[MinimalLabel, MinimalLabel], list[MinimalLabel]]:
    """left x right -> list of outputs with nonzero fusion dimension."""
    ls = labels(m)
    return {
        (a, b): [c for c in ls if fusion_dim(m, c, a, b)]
        for a in ls
        for b in ls
    }


def corollary_2_11_vanishes(n: int, k: int, l: int, p: int, l1: int, l2: int) -> bool:
    """True iff I(L(h_{2p+1,2l1+1}); L(h_{2k+1,1}), L(h_{2l+1,2l2+1})) = 0 for c_n."""
    _check_m(n)
    for name, v in (("k", k), ("l", l), ("p", p)):
        if not 0 <= 2 * v <= n:
            raise BadIndex(f"need 0 <= 2{name} <= n, got {name}={v}, n={n}")
    for name, v in (("l1", l1), ("l2", l2)):
        if not 0 <= 2 * v <= n + 1:
            raise BadIndex(f"need 0 <= 2{name} <= n+1, got {name}={v}, n={n}")
    dim = fusion_dim(n, (2 * p + 1, 2 * l1 + 1), (2 * k + 1, 1), (2 * l + 1, 2 * l2 + 1))
    return dim == 0


def corollary_2_11_box(n: int) -> Iterator[tuple[int, int, int, int, int]]:
    """Every (k, l, p, l1, l2) in the parameter box with l1 != l2."""
    half = range(0, n // 2 + 1)
    wide = range(0, (n + 1) // 2 + 1)
    for k, l, p, l1, l2 in cartesian(half, half, half, wide, wide):
        if l1 != l2:
            yield k, l, p, l1, l2


def tensor_fusion_dim(dims: Iterable[int]) -> int:
    """Fusion dimension for a tensor product of rational VOAs: the product of the factors."""
    return prod(dims)


def minimal_character(label: MinimalLabel | tuple, order: int) -> QSeries:
    """Graded dimension q^h sum_d dim L_{h+d} q^d via the alternating singular-vector sum."""
    if not isinstance(label, MinimalLabel):
        label = MinimalLabel(*label)
    if order < 0:
        raise ValueError("order must be non-negative")
    m, r, s = label.m, label.r, label.s
    p, pp = m + 2, m + 3
    a = pp * r - p * s
    b = pp * r + p * s
    numer = [0] * (order + 1)
    # Exponents relative to h: pp'k^2 + k(p'r - ps) and pp'k^2 + k(p'r + ps) + rs.
    k = 0
    while True:
        hit = False
        for kk in {k, -k}:
            e1 = p * pp * kk * kk + kk * a
            e2 = p * pp * kk * kk + kk * b + r * s
            if 0 <= e1 <= order:
                numer[e1] += 1
                hit = True
            if 0 <= e2 <= order:
                numer[e2] -= 1
                hit = True
        if not hit and p * pp * k * k - k * max(abs(a), abs(b)) > order:
            break
        k += 1
    return (QSeries(numer) * euler_inverse(order)).with_offset(conformal_weight(label))


def fusion_report(m: int) -> dict:
    """Fusion table of L(c_m, 0) with its symmetry and vacuum checks."""
    ls = labels(m)
    vacuum = MinimalLabel(m, 1, 1)
    table = fusion_rules(m)
    symmetric = all(table[(a, b)] == table[(b, a)] for a in ls for b in ls)
    unit = all(table[(vacuum, a)] == [a] for a in ls)
    return {
        "m": m,
        "central_charge": str(central_charge(m)),
        "labels": [{"label": str(x), "h": str(x.weight)} for x in ls],
        "table": {f"{a}x{b}": [str(c) for c in out] for (a, b), out in table.items()},
        "checks": {"symmetric": symmetric, "vacuum_is_unit": unit},
        "ok": symmetric and unit,
    }
