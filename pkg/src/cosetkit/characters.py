"""Graded characters of lattice, affine sl2 and coset modules.

All characters are graded dimensions q^h (sum_d dim V_{h+d} q^d); there is no
-c/24 shift.  The sl2 weight is recorded by z, with the root alpha carrying z^2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import BadIndex, BadLabel, Inconclusive
from .exactq import LaurentPoly, QSeries, TwoVarSeries, euler_inverse, invert_unit
from .minimal_model import MinimalLabel, minimal_character


@dataclass(frozen=True)
class AffineLabel:
    """Integrable highest-weight module L(level, lam) of affine sl2."""

    level: int
    lam: int

    def __post_init__(self):
        if self.level < 1:
            raise BadIndex(f"level must be positive, got {self.level}")
        if not 0 <= self.lam <= self.level:
            raise BadIndex(f"lambda = {self.lam} outside 0..{self.level}")

    @property
    def weight(self) -> Fraction:
        return Fraction(self.lam * (self.lam + 2), 4 * (self.level + 2))


@dataclass(frozen=True)
class CosetLabel:
    """M^{delta'}(k) inside m copies of the A_1 lattice VOA."""

    letters: int
    delta_prime: tuple[int, ...]
    k: int

    def __post_init__(self):
        bits = tuple(int(b) for b in self.delta_prime)
        object.__setattr__(self, "delta_prime", bits)
        if self.letters < 1:
            raise BadLabel("need at least one lattice copy")
        if len(bits) != self.letters or any(b not in (0, 1) for b in bits):
            raise BadLabel(f"delta' must be a 0/1 vector of length {self.letters}")
        if not 0 <= self.k <= self.letters:
            raise BadLabel(f"k = {self.k} outside 0..{self.letters}")
        if (sum(bits) - self.k) % 2:
            raise BadLabel(f"parity mismatch: |delta'| = {sum(bits)}, k = {self.k}")


# ------------------------------------------------------------------ lattice


def _rank_one_theta(parity: int, order: int) -> TwoVarSeries:
    """sum_{y = parity mod 2} z^y q^{y^2/4}, stored at offset parity/4."""
    terms: dict[int, dict[int, int]] = {}
    y = parity
    while (y * y - parity) // 4 <= order:
        for yy in {y, -y}:
            d = (yy * yy - parity) // 4
            terms.setdefault(d, {})
            terms[d][yy] = terms[d].get(yy, 0) + 1
        y += 2
    cs = [LaurentPoly.from_dict(terms.get(d, {})) for d in range(order + 1)]
    return TwoVarSeries(cs, Fraction(parity, 4))


def lattice_character(copies: int, delta_prime: Sequence[int], order: int) -> TwoVarSeries:
    """Character of V_{gamma + A_1^m} with gamma = sum delta'_i alpha^i / 2."""
    bits = tuple(int(b) for b in delta_prime)
    if copies < 1 or len(bits) != copies:
        raise BadIndex("delta' must have one bit per lattice copy")
    return _lattice_character(bits, order)


@lru_cache(maxsize=None)
def _lattice_character(bits: tuple[int, ...], order: int) -> TwoVarSeries:
    out = TwoVarSeries.constant(1, order)
    for b in bits:
        out = out * _rank_one_theta(b, order) * euler_inverse(order)
    return out


# ------------------------------------------------------------------- affine


def theta_difference(lam: int, kappa: int, order: int) -> TwoVarSeries:
    """Theta_{lam+1,kappa} - Theta_{-lam-1,kappa} at offset (lam+1)^2/(4 kappa).

    With a = lam+1 the terms are z^{2 kappa n +- a} q^{(2 kappa n +- a)^2/(4 kappa)}, so the
    exponents relative to the offset are kappa n^2 +- n a.
    """
    a = lam + 1
    terms: dict[int, dict[int, int]] = {}
    bound = 0
    while kappa * bound * bound - bound * a <= order:
        bound += 1
    for n in range(-bound, bound + 1):
        for sign in (1, -1):
            d = kappa * n * n + sign * n * a
            if 0 <= d <= order:
                zexp = 2 * kappa * n + sign * a
                row = terms.setdefault(d, {})
                row[zexp] = row.get(zexp, 0) + sign
    cs = [LaurentPoly.from_dict(terms.get(d, {})) for d in range(order + 1)]
    return TwoVarSeries(cs, Fraction(a * a, 4 * kappa))


@lru_cache(maxsize=None)
def triple_product(order: int) -> TwoVarSeries:
    """prod_{n>=1} (1 - q^n)(1 - z^2 q^n)(1 - z^-2 q^n)."""
    out = TwoVarSeries.constant(1, order)
    for n in range(1, order + 1):
        for zexp in (0, 2, -2):
            factor = TwoVarSeries.from_terms({0: 1, n: LaurentPoly.monomial(zexp, -1)}, order)
            out = out * factor
    return out


def affine_character(label: AffineLabel, order: int) -> TwoVarSeries:
    """Weyl-Kac character of L(level, lam), normalized to start at q^h."""
    return _affine_character(label.level, label.lam, order)


@lru_cache(maxsize=None)
def _affine_character(level: int, lam: int, order: int) -> TwoVarSeries:
    label = AffineLabel(level, lam)
    numer = theta_difference(lam, level + 2, order)
    reduced = numer.map_coefficients(LaurentPoly.divide_by_z_minus_zinv)
    out = reduced * invert_unit(triple_product(order))
    return out.with_offset(label.weight)


# ------------------------------------------------------------------- cosets


@lru_cache(maxsize=None)
def _minimal(m: int, r: int, s: int, order: int) -> QSeries:
    return minimal_character(MinimalLabel(m, r, s), order)


def coset_character(label: CosetLabel, order: int) -> QSeries:
    """Character of M^{delta'}(k), peeling one lattice copy at a time.

    ch M^{d'}(k) = sum over k' = |d''| mod 2, 0 <= k' <= m-1 of
    ch M^{d''}(k') * ch L(c_{m-1}, h_{k'+1, k+1}), where d'' drops the last bit.
    """
    return _coset_character(label.delta_prime, label.k, order)


@lru_cache(maxsize=None)
def _coset_character(bits: tuple[int, ...], k: int, order: int) -> QSeries:
    m = len(bits)
    if m == 1:
        return QSeries.constant(1 if k == bits[0] else 0, order)
    head = bits[:-1]
    total = None
    for kk in range(sum(head) % 2, m, 2):
        term = _coset_character(head, kk, order) * _minimal(m - 1, kk + 1, k + 1, order)
        total = term if total is None else total + term
    return total


def leading_data(label: CosetLabel, order: int) -> tuple[Fraction, int]:
    """(exponent, coefficient) of the first nonzero term of the coset character."""
    lead = coset_character(label, order).leading()
    if lead is None:
        raise Inconclusive(f"coset character of {label} vanishes through order {order}")
    exponent, coeff = lead
    return exponent, int(coeff)


# ------------------------------------------------------------- verification


@dataclass
class DecompositionResult:
    copies: int
    delta_prime: tuple[int, ...]
    order: int
    ok: bool
    mismatch: tuple[Fraction, int] | None = None
    summands: list[dict] = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "copies": self.copies,
            "delta_prime": "".join(map(str, self.delta_prime)),
            "order": self.order,
            "ok": self.ok,
            "mismatch": None if self.mismatch is None
            else {"q_power": str(self.mismatch[0]), "z_power": self.mismatch[1]},
            "summands": self.summands,
        }


def decomposition_rhs(copies: int, delta_prime: Sequence[int], order: int) -> tuple[TwoVarSeries, list[dict]]:
    bits = tuple(int(b) for b in delta_prime)
    total = None
    summands = []
    for k in range(sum(bits) % 2, copies + 1, 2):
        aff = affine_character(AffineLabel(copies, k), order)
        coset = coset_character(CosetLabel(copies, bits, k), order)
        lead = coset.leading()
        summands.append({
            "k": k,
            "affine_weight": str(AffineLabel(copies, k).weight),
            "coset_leading_exponent": None if lead is None else str(lead[0]),
            "coset_leading_coefficient": None if lead is None else str(lead[1]),
        })
        term = aff * coset
        total = term if total is None else total + term
    return total, summands


def verify_decomposition(copies: int, delta_prime: Sequence[int], order: int) -> DecompositionResult:
    """Compare the lattice character with sum_k ch L(m, k) ch M^{delta'}(k), coefficientwise in q and z."""
    bits = tuple(int(b) for b in delta_prime)
    if copies < 2 or len(bits) != copies:
        raise BadIndex("verify_decomposition needs m >= 2 and one bit per copy")
    if order < 1:
        raise BadIndex("order must be at least 1")
    lhs = lattice_character(copies, bits, order)
    rhs, summands = decomposition_rhs(copies, bits, order)
    start = lhs.offset
    top = min(lhs.offset + lhs.order, rhs.offset + rhs.order)
    mismatch = None
    if (rhs.offset - start).denominator != 1 or rhs.offset < start and not _zero_below(rhs, start):
        mismatch = (rhs.offset, _first_z(rhs))
    else:
        e = start
        while e <= top and mismatch is None:
            a, b = lhs.at_exponent(e), rhs.at_exponent(e)
            if a != b:
                diff = a - b
                mismatch = (e, min(x for x, _ in diff.items()))
            e += 1
    if mismatch is None and top < start + order:
        raise Inconclusive(f"right-hand side only known through q^{top}")
    return DecompositionResult(copies, bits, order, mismatch is None, mismatch, summands)


def _zero_below(series, start) -> bool:
    e = series.offset
    while e < start:
        if not series.at_exponent(e).is_zero():
            return False
        e += 1
    return True


def _first_z(series: TwoVarSeries) -> int:
    lead = series.leading()
    return min(x for x, _ in lead[1].items()) if lead else 0
