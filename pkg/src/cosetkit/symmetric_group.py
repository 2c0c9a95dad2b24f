"""Exact computations in the group algebra Q[S_N].

Permutations act on {1..N} and compose right-to-left: (s*t)(x) = s(t(x)).
Tableaux are filled with 1..N; the standard tableau t^lambda is filled
top-down in each column, starting from the first column.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _permutations
from itertools import product as cartesian
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BadIndex, SizeLimit, TheoryViolation
from .linalg import Echelon, is_zero_matrix

Partition = tuple[int, ...]
Matrix = list[list[Fraction]]

MAX_IDEAL_N = 6
MAX_TN_N = 7


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BadIndex(f"{self.images} is not a bijection on 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        return cls.from_cycles(n, (i, j))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        """s_i = (i, i+1)."""
        return cls.transposition(n, i, i + 1)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Coxeter length in the simple transpositions: the inversion count."""
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def reduced_word(self) -> list[int]:
        """Indices i_1..i_k with self = s_{i_1} s_{i_2} ... s_{i_k}, k = length()."""
        im = list(self.images)
        peeled = []
        while True:
            for i in range(len(im) - 1):
                if im[i] > im[i + 1]:
                    im[i], im[i + 1] = im[i + 1], im[i]
                    peeled.append(i + 1)
                    break
            else:
                break
        return peeled[::-1]

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "1"
        sep = "," if self.n >= 10 else ""
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in _permutations(range(1, n + 1)))


def permutations_of_blocks(n: int, blocks: Iterable[Sequence[int]]) -> list[Permutation]:
    """All permutations of {1..n} that preserve each block setwise."""
    blocks = [tuple(b) for b in blocks if len(b) > 1]
    per_block = [list(_permutations(b)) for b in blocks]
    out = []
    for choice in cartesian(*per_block):
        images = list(range(1, n + 1))
        for block, img in zip(blocks, choice):
            for src, dst in zip(block, img):
                images[src - 1] = dst
        out.append(Permutation(tuple(images)))
    return out


class GroupAlgebraElement:
    """Finitely supported map S_N -> Q; zero coefficients are never stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, object] | None = None):
        self.n = n
        clean = {}
        for perm, c in (terms or {}).items():
            if perm.n != n:
                raise BadIndex(f"{perm} is not in S_{n}")
            c = Fraction(c)
            if c:
                clean[perm] = c
        self.terms: dict[Permutation, Fraction] = clean

    @classmethod
    def of(cls, perm: Permutation, coeff=1) -> "GroupAlgebraElement":
        return cls(perm.n, {perm: coeff})

    @classmethod
    def one(cls, n: int) -> "GroupAlgebraElement":
        return cls.of(Permutation.identity(n))

    @classmethod
    def sum_of(cls, n: int, perms: Iterable[Permutation], signed: bool = False) -> "GroupAlgebraElement":
        terms: dict[Permutation, Fraction] = {}
        for p in perms:
            terms[p] = terms.get(p, Fraction(0)) + (p.sign() if signed else 1)
        return cls(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == GroupAlgebraElement.one(self.n) * other
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _combine(self, other, sign):
        if isinstance(other, (int, Fraction)):
            other = GroupAlgebraElement.one(self.n) * other
        if other.n != self.n:
            raise BadIndex(f"cannot combine elements of S_{self.n} and S_{other.n}")
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, Fraction(0)) + sign * c
        return GroupAlgebraElement(self.n, terms)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GroupAlgebraElement(self.n, {p: -c for p, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupAlgebraElement(self.n, {p: c * other for p, c in self.terms.items()})
        if isinstance(other, Permutation):
            other = GroupAlgebraElement.of(other)
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if other.n != self.n:
            raise BadIndex(f"cannot multiply elements of S_{self.n} and S_{other.n}")
        terms: dict[Permutation, Fraction] = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                pq = p * q
                terms[pq] = terms.get(pq, Fraction(0)) + a * b
        return GroupAlgebraElement(self.n, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        if isinstance(other, Permutation):
            return GroupAlgebraElement.of(other) * self
        return NotImplemented

    def vector(self) -> list[Fraction]:
        index = permutation_index(self.n)
        vec = [Fraction(0)] * len(index)
        for p, c in self.terms.items():
            vec[index[p]] = c
        return vec

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for p in sorted(self.terms):
            c = self.terms[p]
            parts.append(f"{c}*{p}" if c != 1 else str(p))
        return " + ".join(parts)


@lru_cache(maxsize=None)
def permutation_index(n: int) -> dict[Permutation, int]:
    return {p: i for i, p in enumerate(all_permutations(n))}


# ---------------------------------------------------------------- partitions


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(x) for x in parts)
    if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise BadIndex(f"{parts} is not a partition")
    return parts


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def two_row_partitions(n: int) -> list[Partition]:
    """(n-k, k) for 0 <= k <= n // 2, dropping the zero part."""
    return [tuple(x for x in (n - k, k) if x) for k in range(n // 2 + 1)]


def conjugate(shape: Partition) -> Partition:
    return tuple(sum(1 for row in shape if row > j) for j in range(shape[0])) if shape else ()


def specht_dimension(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    shape = check_partition(shape)
    cols = conjugate(shape)
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (cols[j] - i - 1) + 1
    return factorial(sum(shape)) // hooks


def content_sum(shape: Sequence[int]) -> Fraction:
    """Sum over boxes (i, j) of j - i: the scalar of sum_{i<j} (i j) on the Specht module."""
    shape = check_partition(shape)
    return Fraction(sum(j - i for i, row in enumerate(shape) for j in range(row)))


# ------------------------------------------------------------------ tableaux


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_partition([len(r) for r in self.rows])
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise BadIndex(f"{self.rows} is not a bijective filling of 1..N")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))]

    def row_group(self) -> list[Permutation]:
        return permutations_of_blocks(self.n, self.rows)

    def column_group(self) -> list[Permutation]:
        return permutations_of_blocks(self.n, self.columns())

    def relabel(self, perm: Permutation) -> "Tableau":
        return Tableau(tuple(tuple(perm(x) for x in r) for r in self.rows))


def standard_tableau(shape: Sequence[int]) -> Tableau:
    """t^lambda: 1..N placed top-down in each column, first column first."""
    shape = check_partition(shape)
    cols = conjugate(shape)
    rows = [[] for _ in shape]
    x = 1
    for height in cols:
        for i in range(height):
            rows[i].append(x)
            x += 1
    return Tableau(tuple(tuple(r) for r in rows))


def all_tableaux(shape: Sequence[int]) -> Iterator[Tableau]:
    base = standard_tableau(shape)
    for perm in all_permutations(base.n):
        yield base.relabel(perm)


def young_symmetrizer(t: Tableau) -> tuple[GroupAlgebraElement, GroupAlgebraElement, GroupAlgebraElement]:
    """(a_t, b_t, c_t) with a_t = sum of row group, b_t = signed sum of column group, c_t = b_t a_t."""
    a = GroupAlgebraElement.sum_of(t.n, t.row_group())
    b = GroupAlgebraElement.sum_of(t.n, t.column_group(), signed=True)
    return a, b, b * a


# --------------------------------------------------------------- the ideal J


def simple_element(n: int, i: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.of(Permutation.simple(n, i))


def j_ideal_generators(n: int) -> list[GroupAlgebraElement]:
    """(s_i + s_{i+1} + s_{i+1}s_is_{i+1})(same - 3) for 1 <= i <= n-2; empty for n <= 2."""
    if n < 1:
        raise BadIndex("N must be positive")
    gens = []
    for i in range(1, n - 1):
        si, sj = simple_element(n, i), simple_element(n, i + 1)
        e = si + sj + sj * si * sj
        gens.append(e * (e - 3))
    return gens


class TwoSidedIdeal:
    """Span of {g x h} for generators x, built as the closure under left and right s_i."""

    def __init__(self, n: int, generators: Sequence[GroupAlgebraElement]):
        if n > MAX_IDEAL_N:
            raise SizeLimit(f"two-sided ideal spans are limited to N <= {MAX_IDEAL_N}, got {n}")
        self.n = n
        perms = all_permutations(n)
        index = permutation_index(n)
        size = len(perms)
        left = []
        right = []
        for i in range(1, n):
            s = Permutation.simple(n, i)
            left.append([index[s * p] for p in perms])
            right.append([index[p * s] for p in perms])
        self.echelon = Echelon(size)
        queue = deque()
        for g in generators:
            if g.n != n:
                raise BadIndex(f"generator lives in S_{g.n}, not S_{n}")
            vec = g.vector()
            if self.echelon.insert(vec):
                queue.append(vec)
        while queue:
            vec = queue.popleft()
            for table in left + right:
                moved = [Fraction(0)] * size
                for src, dst in enumerate(table):
                    moved[dst] = vec[src]
                if self.echelon.insert(moved):
                    queue.append(moved)

    @property
    def dimension(self) -> int:
        return self.echelon.rank

    def __contains__(self, x: GroupAlgebraElement) -> bool:
        if x.n != self.n:
            raise BadIndex(f"element lives in S_{x.n}, not S_{self.n}")
        return self.echelon.contains(x.vector())


_IDEAL_CACHE: dict = {}


def two_sided_ideal(n: int, generators: Sequence[GroupAlgebraElement]) -> TwoSidedIdeal:
    key = (n, tuple(generators))
    ideal = _IDEAL_CACHE.get(key)
    if ideal is None:
        ideal = _IDEAL_CACHE[key] = TwoSidedIdeal(n, generators)
    return ideal


def two_sided_ideal_membership(x: GroupAlgebraElement, generators: Sequence[GroupAlgebraElement]) -> bool:
    """Exact decision whether x lies in the two-sided ideal generated by ``generators``."""
    if x.n > MAX_IDEAL_N:
        raise SizeLimit(f"ideal membership is limited to N <= {MAX_IDEAL_N}, got {x.n}")
    if x.is_zero():
        return True
    if not generators:
        return False
    return x in two_sided_ideal(x.n, generators)


def j_ideal(n: int) -> TwoSidedIdeal:
    return two_sided_ideal(n, j_ideal_generators(n))


# ------------------------------------------------------------ Specht modules


def standard_young_tableaux(shape: Sequence[int]) -> list[Tableau]:
    """All standard Young tableaux of the shape, in a fixed deterministic order."""
    shape = check_partition(shape)
    n = sum(shape)
    out = []

    def fill(rows, x):
        if x > n:
            out.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(x)
                fill(rows, x + 1)
                rows[i].pop()

    fill([[] for _ in shape], 1)
    return out


class SpechtModule:
    """S^lambda in Young's seminormal basis (basis vectors indexed by standard tableaux)."""

    def __init__(self, shape: Sequence[int]):
        self.shape = check_partition(shape)
        self.n = sum(self.shape)
        self.basis = standard_young_tableaux(self.shape)
        self.dim = len(self.basis)
        self._index = {t: k for k, t in enumerate(self.basis)}
        self._positions = [
            {x: (i, j) for i, row in enumerate(t.rows) for j, x in enumerate(row)}
            for t in self.basis
        ]
        # sparse rows of rho(s_i): row -> [(col, value)]
        self._sparse = {i: self._generator_rows(i) for i in range(1, self.n)}

    def _generator_rows(self, i: int) -> list[list[tuple[int, Fraction]]]:
        cols: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.dim)]
        swap = Permutation.simple(self.n, i)
        for k, t in enumerate(self.basis):
            pos = self._positions[k]
            (ri, ci), (rj, cj) = pos[i], pos[i + 1]
            if ri == rj:
                cols[k].append((k, Fraction(1)))
                continue
            if ci == cj:
                cols[k].append((k, Fraction(-1)))
                continue
            axial = (cj - rj) - (ci - ri)
            other = self._index[t.relabel(swap)]
            cols[k].append((k, Fraction(1, axial)))
            if ri < rj:
                cols[k].append((other, Fraction(1)))
            else:
                cols[k].append((other, 1 - Fraction(1, axial * axial)))
        rows: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.dim)]
        for col, entries in enumerate(cols):
            for row, value in entries:
                rows[row].append((col, value))
        return rows

    def generator(self, i: int) -> Matrix:
        if not 1 <= i < self.n:
            raise BadIndex(f"s_{i} is not a simple transposition of S_{self.n}")
        mat = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for r, entries in enumerate(self._sparse[i]):
            for c, v in entries:
                mat[r][c] = v
        return mat

    def _left_apply(self, i: int, mat: Matrix) -> Matrix:
        out = []
        for entries in self._sparse[i]:
            if len(entries) == 1:
                c, v = entries[0]
                out.append([v * x for x in mat[c]] if v != 1 else list(mat[c]))
            else:
                (c1, v1), (c2, v2) = entries
                out.append([v1 * x + v2 * y for x, y in zip(mat[c1], mat[c2])])
        return out

    def matrix(self, perm: Permutation) -> Matrix:
        mat = [[Fraction(int(r == c)) for c in range(self.dim)] for r in range(self.dim)]
        for i in reversed(perm.reduced_word()):
            mat = self._left_apply(i, mat)
        return mat

    def all_matrices(self) -> dict[Permutation, Matrix]:
        """rho(sigma) for every sigma in S_N, by breadth-first search on s_i * sigma."""
        ident = Permutation.identity(self.n)
        out = {ident: [[Fraction(int(r == c)) for c in range(self.dim)] for r in range(self.dim)]}
        queue = deque([ident])
        while queue:
            p = queue.popleft()
            for i in range(1, self.n):
                q = Permutation.simple(self.n, i) * p
                if q not in out:
                    out[q] = self._left_apply(i, out[p])
                    queue.append(q)
        return out

    def act(self, x: GroupAlgebraElement, matrices: Mapping[Permutation, Matrix] | None = None) -> Matrix:
        acc = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for p, c in x.terms.items():
            m = matrices[p] if matrices is not None else self.matrix(p)
            for r in range(self.dim):
                row, mrow = acc[r], m[r]
                for k in range(self.dim):
                    if mrow[k]:
                        row[k] += c * mrow[k]
        return acc

    def character(self, perm: Permutation) -> Fraction:
        m = self.matrix(perm)
        return sum((m[k][k] for k in range(self.dim)), Fraction(0))


@lru_cache(maxsize=None)
def specht_module(shape: Partition) -> SpechtModule:
    return SpechtModule(shape)


def specht_matrices(shape: Sequence[int]) -> dict[int, Matrix]:
    """Matrices of s_1..s_{N-1} on S^lambda."""
    mod = specht_module(check_partition(shape))
    return {i: mod.generator(i) for i in range(1, mod.n)}


# ------------------------------------------------------------------- T^N


@dataclass
class SemisimpleReport:
    n: int
    blocks: list[tuple[int, Partition]]
    total_dim: int
    evaluation_rank: int
    generators_checked: int
    nonsurviving_shapes: list[Partition] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "N": self.n,
            "blocks": [{"dim": d, "partition": list(p)} for d, p in self.blocks],
            "total_dim": self.total_dim,
            "evaluation_rank": self.evaluation_rank,
            "generators_checked": self.generators_checked,
            "shapes_killed_by_J": [list(p) for p in self.nonsurviving_shapes],
        }


def build_TN(n: int) -> SemisimpleReport:
    """T^N = Q[S_N]/J^N through the evaluation map into the two-row Specht blocks.

    Certifies that every J^N generator vanishes on each two-row Specht module,
    that the evaluation map onto their endomorphism algebras is surjective, and
    that J^N acts nontrivially on every Specht module with three or more rows.
    """
    if not 1 <= n <= MAX_TN_N:
        raise SizeLimit(f"build_TN supports 1 <= N <= {MAX_TN_N}, got {n}")
    gens = j_ideal_generators(n)
    shapes = two_row_partitions(n)
    modules = [specht_module(s) for s in shapes]
    mats = [mod.all_matrices() for mod in modules]
    for shape, mod, table in zip(shapes, modules, mats):
        for idx, g in enumerate(gens, start=1):
            if not is_zero_matrix(mod.act(g, table)):
                raise TheoryViolation(
                    f"J^{n} generator {idx} acts nontrivially on S^{shape}",
                    {"check": "J annihilates two-row Specht modules", "N": n, "shape": list(shape)},
                )
    target = sum(mod.dim ** 2 for mod in modules)
    ech = Echelon(target)
    for perm in all_permutations(n):
        row = [x for table in mats for mrow in table[perm] for x in mrow]
        ech.insert(row)
        if ech.rank == target:
            break
    if ech.rank != target:
        raise TheoryViolation(
            f"evaluation map of Q[S_{n}] has rank {ech.rank} < {target}",
            {"check": "surjectivity onto two-row blocks", "N": n, "rank": ech.rank, "expected": target},
        )
    killed = []
    for shape in partitions(n):
        if len(shape) < 3:
            continue
        mod = specht_module(shape)
        if all(is_zero_matrix(mod.act(g)) for g in gens):
            raise TheoryViolation(
                f"J^{n} annihilates S^{shape}, so T^{n} would carry an extra block",
                {"check": "J kills shapes with >= 3 rows", "N": n, "shape": list(shape)},
            )
        killed.append(shape)
    blocks = [(mod.dim, shape) for mod, shape in zip(modules, shapes)]
    return SemisimpleReport(
        n=n,
        blocks=blocks,
        total_dim=sum(d * d for d, _ in blocks),
        evaluation_rank=ech.rank,
        generators_checked=len(gens),
        nonsurviving_shapes=killed,
    )


# ------------------------------------------------------------ membership checks


def embedded_s3_identity(n: int) -> bool:
    """e(e - 3) = 3 b_{t^mu} for e = (12)+(23)+(13) and mu = (N-2, 1, 1), inside S_N."""
    if n < 3:
        raise BadIndex("the identity needs N >= 3")
    s1, s2 = simple_element(n, 1), simple_element(n, 2)
    e = s1 + s2 + s1 * s2 * s1
    mu = (n - 2, 1, 1) if n > 3 else (1, 1, 1)
    _, b, _ = young_symmetrizer(standard_tableau(mu))
    return e * (e - 3) == b * 3


def signed_coxeter_sum(perms: Iterable[Permutation], n: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.sum_of(n, perms, signed=True)


def parabolic_factorization(shape: Sequence[int]) -> tuple[GroupAlgebraElement, GroupAlgebraElement]:
    """Both sides of sum_W (-1)^l(w) w = (sum_{W^I} (-1)^l(t) t)(sum_{W_I} (-1)^l(r) r).

    W is the column group of t^lambda and W_I = S_3 on {1, 2, 3}, the column
    group of t^mu for mu = (N-2, 1, 1).  Needs lambda with at least 3 parts.
    """
    shape = check_partition(shape)
    if len(shape) < 3:
        raise BadIndex("the factorization needs a shape with at least three parts")
    n = sum(shape)
    big = standard_tableau(shape).column_group()
    small = permutations_of_blocks(n, [(1, 2, 3)])
    # minimal left coset representatives: w(1) < w(2) < w(3)
    reps = [w for w in big if w(1) < w(2) < w(3)]
    lhs = signed_coxeter_sum(big, n)
    rhs = signed_coxeter_sum(reps, n) * signed_coxeter_sum(small, n)
    return lhs, rhs


def lemma42_report(n: int) -> dict:
    """c_{t^lambda} in J^N for every lambda with >= 3 parts, plus the embedded S_3 identity."""
    if n > 5:
        raise SizeLimit("the Young symmetrizer membership suite is limited to N <= 5")
    gens = j_ideal_generators(n)
    rows = []
    for shape in partitions(n):
        if len(shape) < 3:
            continue
        _, _, c = young_symmetrizer(standard_tableau(shape))
        rows.append({"partition": list(shape), "c_t_in_J": two_sided_ideal_membership(c, gens)})
    return {
        "N": n,
        "ideal_dim": j_ideal(n).dimension if gens else 0,
        "memberships": rows,
        "s3_identity": embedded_s3_identity(n) if n >= 3 else None,
        "ok": all(r["c_t_in_J"] for r in rows) and (n < 3 or embedded_s3_identity(n)),
    }
