"""Irreducible M^(n)-modules M^{delta'}(k): labels, types, eigenvalue tables, lowest weights.

A label is a parity vector delta' in Z_2^{n+1} together with an sl2 weight
0 <= k <= n+1 of matching parity.  (delta', k) and (delta' + 1, n+1-k) name the
same module.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product as cartesian
from math import comb
from typing import Iterator, Sequence

from .errors import BadLabel, SearchExhausted, SizeLimit, TheoryViolation
from .symmetric_group import content_sum, specht_dimension

MAX_ORACLE_N = 8
MAX_FORMULA_N = 12

HALF = Fraction(1, 2)
SIXTEENTH = Fraction(1, 16)


class ModuleType(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True, order=True)
class ModuleLabel:
    n: int
    delta_prime: tuple[int, ...]
    k: int

    def __post_init__(self):
        bits = tuple(int(b) for b in self.delta_prime)
        object.__setattr__(self, "delta_prime", bits)
        if self.n < 1:
            raise BadLabel("n must be at least 1")
        if len(bits) != self.n + 1 or any(b not in (0, 1) for b in bits):
            raise BadLabel(f"delta' must be a 0/1 vector of length {self.n + 1}, got {bits}")
        if not 0 <= self.k <= self.n + 1:
            raise BadLabel(f"k = {self.k} outside 0..{self.n + 1}")
        if (sum(bits) - self.k) % 2:
            raise BadLabel(f"parity mismatch: |delta'| = {sum(bits)}, k = {self.k}")

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.delta_prime) if b)

    @cached_property
    def complement(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.delta_prime) if not b)

    def flipped(self) -> "ModuleLabel":
        return ModuleLabel(self.n, tuple(1 - b for b in self.delta_prime), self.n + 1 - self.k)

    def bits(self) -> str:
        return "".join(map(str, self.delta_prime))

    def __str__(self):
        return f"M^{self.bits()}({self.k})"


def canonical_label(delta_prime: Sequence[int], k: int) -> ModuleLabel:
    """The lexicographically smaller of (delta', k) and (delta' + 1, n+1-k)."""
    label = ModuleLabel(len(delta_prime) - 1, tuple(delta_prime), k)
    other = label.flipped()
    return min(label, other, key=lambda x: (x.delta_prime, x.k))


def is_canonical(label: ModuleLabel) -> bool:
    return canonical_label(label.delta_prime, label.k) == label


def expected_count(n: int) -> int:
    return 2 ** (n - 1) * (n + 2)


def enumerate_modules(n: int) -> list[ModuleLabel]:
    """Canonical labels for all inequivalent irreducible modules, sorted by (delta', k)."""
    if not 2 <= n <= MAX_FORMULA_N:
        raise SizeLimit(f"enumerate_modules supports 2 <= n <= {MAX_FORMULA_N}, got {n}")
    seen: dict[tuple, tuple] = {}
    for bits in cartesian((0, 1), repeat=n + 1):
        weight = sum(bits)
        flip = tuple(1 - b for b in bits)
        for k in range(weight % 2, n + 2, 2):
            partner = (flip, n + 1 - k)
            if partner == (bits, k):
                raise TheoryViolation(
                    f"label ({bits}, {k}) is fixed by the involution",
                    {"check": "involution is fixed-point free", "n": n},
                )
            key = min((bits, k), partner)
            seen.setdefault(key, (bits, k))
    labels = [ModuleLabel(n, bits, k) for bits, k in sorted(seen)]
    if len(labels) != expected_count(n):
        raise TheoryViolation(
            f"found {len(labels)} classes for n = {n}, expected {expected_count(n)}",
            {"check": "module count", "n": n, "found": len(labels)},
        )
    return labels


def theorem_416_label(label: ModuleLabel) -> tuple[tuple[int, ...], int]:
    """Representative in the (delta in Z_2^n, k) parametrization.

    For n even the representative with k even is used; for n odd the one whose
    last coordinate of delta' vanishes.  delta is the first n coordinates.
    """
    keep = label.k % 2 == 0 if label.n % 2 == 0 else label.delta_prime[-1] == 0
    if keep:
        return label.delta_prime[: label.n], label.k
    return tuple(1 - b for b in label.delta_prime[: label.n]), label.n + 1 - label.k


def type_of(label: ModuleLabel) -> ModuleType:
    return ModuleType.TYPE_I if len(label.support) in (0, label.n + 1) else ModuleType.TYPE_II


# ------------------------------------------------------------ Specht block


@lru_cache(maxsize=None)
def _specht_dimension(partition: tuple[int, ...]) -> int:
    return specht_dimension(partition) if partition else 1


@dataclass(frozen=True)
class SpechtBlock:
    """Block of indices on which the [w^{ij}] act through the Specht module S^partition."""

    indices: tuple[int, ...]
    partition: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def dimension(self) -> int:
        return _specht_dimension(self.partition)

    def scalar(self) -> Fraction | None:
        """The common eigenvalue of every [w^{ij}] on the block when S^partition is one-dimensional."""
        if self.partition == (self.size,):
            return Fraction(0)
        if self.partition == (1, 1):
            return HALF
        return None

    def __str__(self):
        return f"SPECHT({','.join(map(str, self.indices))};{self.partition})"


def specht_block(label: ModuleLabel) -> tuple[SpechtBlock, tuple[int, ...]]:
    """(Specht block, zero block) for a label.

    With N = |support|: for k < N the support carries (N - t, t), t = (N - k)/2,
    and the complement acts by 0; for k > N the complement (size m) carries
    (m - t, t), t = (k - N)/2, and the support acts by 0.  At k = N both blocks
    act by 0 and the larger one is reported, so both representatives agree.
    """
    support, rest = label.support, label.complement
    size = len(support)
    if label.k < size or (label.k == size and size >= len(rest)):
        block, zero, t = support, rest, (size - label.k) // 2
    else:
        block, zero, t = rest, support, (label.k - size) // 2
    m = len(block)
    partition = tuple(x for x in (m - t, t) if x)
    return SpechtBlock(block, partition), zero


def _pair_weight_sum(block: SpechtBlock) -> Fraction:
    """Eigenvalue of the sum of [w^{ij}] over pairs in the block: (C(m,2) - content)/4."""
    return _pair_weight(block.size, block.partition)


@lru_cache(maxsize=None)
def _pair_weight(size: int, partition: tuple[int, ...]) -> Fraction:
    if size < 2:
        return Fraction(0)
    return Fraction(comb(size, 2) - content_sum(partition), 4)


@dataclass(frozen=True)
class EigenvalueTable:
    label: ModuleLabel
    block: SpechtBlock
    zero_block: tuple[int, ...]
    entries: dict

    @property
    def support(self) -> tuple[int, ...]:
        return self.label.support

    def scalars(self) -> list[Fraction]:
        return [v for v in self.entries.values() if isinstance(v, Fraction)]

    def cells(self) -> list[str]:
        """Flat "i-j:value" strings in pair order."""
        block = "S(" + ",".join(map(str, self.block.partition)) + ")"
        return [
            f"{i}-{j}:{_SCALAR_TEXT[v] if isinstance(v, Fraction) else block}"
            for (i, j), v in self.entries.items()
        ]

    def summary(self) -> dict:
        counts: dict[str, int] = {}
        for v in self.entries.values():
            key = _SCALAR_TEXT[v] if isinstance(v, Fraction) else "SPECHT"
            counts[key] = counts.get(key, 0) + 1
        return counts


_SCALAR_TEXT = {Fraction(0): "0", HALF: "1/2", SIXTEENTH: "1/16"}


def eigenvalue_table(label: ModuleLabel) -> EigenvalueTable:
    block, zero = specht_block(label)
    bits = label.delta_prime
    inside = set(block.indices)
    scalar = block.scalar()
    within = scalar if scalar is not None else block
    nothing = Fraction(0)
    entries: dict[tuple[int, int], object] = {}
    for i, j in combinations(range(label.n + 1), 2):
        if bits[i] != bits[j]:
            entries[(i, j)] = SIXTEENTH
        elif i in inside:
            entries[(i, j)] = within
        else:
            entries[(i, j)] = nothing
    return EigenvalueTable(label, block, zero, entries)


def table_summary(label: ModuleLabel) -> dict:
    """Entry counts of eigenvalue_table(label), computed from block sizes alone."""
    block, zero = specht_block(label)
    return dict(_summary(label.n, len(label.support), block.partition, len(zero)))


@lru_cache(maxsize=None)
def _summary(n: int, size: int, partition: tuple[int, ...], zero_size: int) -> tuple:
    block_size = sum(partition)
    scalar = SpechtBlock(tuple(range(block_size)), partition).scalar()
    counts: dict[str, int] = {}
    for key, count in (
        ("1/16", size * (n + 1 - size)),
        (_SCALAR_TEXT[scalar] if scalar is not None else "SPECHT", comb(block_size, 2)),
        ("0", comb(zero_size, 2)),
    ):
        if count:
            counts[key] = counts.get(key, 0) + count
    return tuple(counts.items())


def lowest_conformal_weight(label: ModuleLabel) -> Fraction:
    """Eigenvalue of w = 4/(n+3) sum [w^{ij}] on the lowest-weight space."""
    return _label_weight(label, specht_block(label)[0])


def _label_weight(label: ModuleLabel, block: SpechtBlock) -> Fraction:
    size = len(label.support)
    return _weight(label.n, size * (label.n + 1 - size), block.size, block.partition)


@lru_cache(maxsize=None)
def _weight(n: int, cross: int, size: int, partition: tuple[int, ...]) -> Fraction:
    return Fraction(4, n + 3) * (Fraction(cross, 16) + _pair_weight(size, partition))


def lowest_space_dimension(label: ModuleLabel) -> int:
    return specht_block(label)[0].dimension


# ------------------------------------------------------------ lattice oracle


@lru_cache(maxsize=None)
def _box_minimum(parities: tuple[int, ...], k: int, bound: int) -> Fraction | None:
    """min sum y_i^2/4 over y_i = parity_i mod 2, |y_i - parity_i| <= 2*bound, sum y_i = k."""
    best: dict[int, int] = {0: 0}
    for p in parities:
        choices = [p + 2 * x for x in range(-bound, bound + 1)]
        nxt: dict[int, int] = {}
        for s, cost in best.items():
            for y in choices:
                key, val = s + y, cost + y * y
                if val < nxt.get(key, val + 1):
                    nxt[key] = val
        best = nxt
    if k not in best:
        return None
    return Fraction(best[k], 4)


def lattice_lowest_weight_oracle(label: ModuleLabel, bound: int = 3) -> Fraction:
    """Minimum of |v|^2/2 over v in gamma_{delta'} + sum Z alpha^i with sl2 weight k, minus h_aff.

    v = sum y_i alpha^i / 2 with y_i = delta'_i mod 2; |v|^2/2 = sum y_i^2/4.
    The box |x_i| <= bound is doubled until the minimum is stable over two rounds.
    """
    if bound < 0:
        raise SearchExhausted("search bound must be non-negative")
    parities = tuple(sorted(label.delta_prime))
    previous = _box_minimum(parities, label.k, bound)
    if previous is None:
        raise SearchExhausted(f"no lattice vector of weight {label.k} in box |x_i| <= {bound}")
    while True:
        bound *= 2 if bound else 1
        current = _box_minimum(parities, label.k, bound)
        if current == previous:
            break
        if bound > 1 << 10:
            raise SearchExhausted("lattice minimum did not stabilize")
        previous = current
    h_aff = Fraction(label.k * (label.k + 2), 4 * (label.n + 3))
    return current - h_aff


# ------------------------------------------------------------------ report


def module_row(label: ModuleLabel, oracle: bool = False) -> dict:
    block, zero = specht_block(label)
    weight = _label_weight(label, block)
    delta, k416 = theorem_416_label(label)
    row = {
        "delta_prime": label.bits(),
        "k": label.k,
        "delta": "".join(map(str, delta)),
        "k_theorem": k416,
        "type": type_of(label).value,
        "specht_block": list(block.indices),
        "partition": list(block.partition),
        "zero_block": list(zero),
        "lowest_weight": str(weight),
        "lowest_space_dim": block.dimension,
        "eigenvalues": dict(_summary(label.n, len(label.support), block.partition, len(zero))),
    }
    if oracle:
        value = lattice_lowest_weight_oracle(label)
        row["oracle_weight"] = str(value)
        if value != weight:
            raise TheoryViolation(
                f"{label}: formula {weight} differs from lattice oracle {value}",
                {"check": "lowest weight vs lattice oracle", "label": str(label),
                 "formula": str(weight), "oracle": str(value)},
            )
    return row


def module_report(n: int, oracle: bool = True) -> list[dict]:
    """One row per canonical label; with ``oracle`` every weight is cross-checked."""
    limit = MAX_ORACLE_N if oracle else MAX_FORMULA_N
    if n > limit:
        raise SizeLimit(f"module_report supports n <= {limit}{' with the oracle' if oracle else ''}, got {n}")
    return [module_row(label, oracle) for label in enumerate_modules(n)]


def iter_all_labels(n: int) -> Iterator[ModuleLabel]:
    """Every (delta', k) with matching parity, canonical or not."""
    for bits in cartesian((0, 1), repeat=n + 1):
        for k in range(sum(bits) % 2, n + 2, 2):
            yield ModuleLabel(n, bits, k)
