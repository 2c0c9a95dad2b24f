"""The weight-two (Griess) algebra spanned by the conformal vectors w^{ij}.

Indices run over 0..n and w^{ij} = w^{ji}.  The product is the 1-product
restricted to this span; the form is the invariant bilinear form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .errors import BadIndex, TheoryViolation
from .linalg import identity, is_zero_matrix, mat_add, mat_scale, matmul, nullity, rank

Pair = tuple[int, int]
Matrix = list[list[Fraction]]

HALF = Fraction(1, 2)
SIXTEENTH = Fraction(1, 16)


def _pair(i: int, j: int) -> Pair:
    if i == j:
        raise BadIndex(f"w^{{{i}{j}}} needs two distinct indices")
    return (i, j) if i < j else (j, i)


def pairs(n: int) -> list[Pair]:
    return list(combinations(range(n + 1), 2))


class GriessVector:
    """Rational combination of the w^{ij}, 0 <= i < j <= n."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Mapping[Pair, object] | None = None):
        if n < 1:
            raise BadIndex("n must be at least 1")
        self.n = n
        clean: dict[Pair, Fraction] = {}
        for (i, j), c in (coords or {}).items():
            if not (0 <= i <= n and 0 <= j <= n):
                raise BadIndex(f"index pair {(i, j)} outside 0..{n}")
            key = _pair(i, j)
            clean[key] = clean.get(key, Fraction(0)) + Fraction(c)
        self.coords = {k: v for k, v in sorted(clean.items()) if v}

    def _check(self, other: "GriessVector"):
        if not isinstance(other, GriessVector) or other.n != self.n:
            raise BadIndex("Griess vectors must share the same n")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, Fraction(0)) + v
        return GriessVector(self.n, out)

    def __sub__(self, other):
        return self + other * -1

    def __neg__(self):
        return self * -1

    def __mul__(self, c):
        if isinstance(c, GriessVector):
            return product(self, c)
        return GriessVector(self.n, {k: v * c for k, v in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GriessVector) and self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.n, tuple(self.coords.items())))

    def is_zero(self) -> bool:
        return not self.coords

    def vector(self) -> list[Fraction]:
        return [self.coords.get(p, Fraction(0)) for p in pairs(self.n)]

    def __repr__(self):
        if not self.coords:
            return "0"
        return " + ".join(f"{v}*w{i}{j}" if v != 1 else f"w{i}{j}" for (i, j), v in self.coords.items())


def omega(n: int, i: int, j: int) -> GriessVector:
    return GriessVector(n, {_pair(i, j): 1})


def omega3(n: int, i: int, j: int, l: int) -> GriessVector:
    """w^{ijl} = 4/5 (w^{ij} + w^{jl} + w^{il})."""
    if len({i, j, l}) != 3:
        raise BadIndex("w^{ijl} needs three distinct indices")
    return (omega(n, i, j) + omega(n, j, l) + omega(n, i, l)) * Fraction(4, 5)


def virasoro_vector(n: int) -> GriessVector:
    """w = 4/(n+3) times the sum of all w^{ij}."""
    if n < 1:
        raise BadIndex("n must be at least 1")
    c = Fraction(4, n + 3)
    return GriessVector(n, {p: c for p in pairs(n)})


# Disjoint-pair constants.  The defaults are the values derived by
# solve_disjoint_constants(); the parameters exist so the solver can vary them.
@dataclass(frozen=True)
class DisjointConstants:
    product_same: Fraction = Fraction(0)    # coefficient of w^{ij} + w^{kl} in w^{ij} w^{kl}
    product_cross: Fraction = Fraction(0)   # coefficient of w^{ik} + w^{il} + w^{jk} + w^{jl}
    form: Fraction = Fraction(0)            # (w^{ij}, w^{kl})


DERIVED = DisjointConstants()


def _basis_product(a: Pair, b: Pair, consts: DisjointConstants) -> dict[Pair, Fraction]:
    if a == b:
        return {a: Fraction(2)}
    shared = set(a) & set(b)
    if shared:
        (s,) = shared
        x = a[0] if a[1] == s else a[1]
        y = b[0] if b[1] == s else b[1]
        q = Fraction(1, 4)
        return {a: q, b: q, _pair(x, y): -q}
    (i, j), (k, l) = a, b
    out: dict[Pair, Fraction] = {}
    if consts.product_same:
        out[a] = out[b] = consts.product_same
    if consts.product_cross:
        for p in ((i, k), (i, l), (j, k), (j, l)):
            out[_pair(*p)] = consts.product_cross
    return out


def _basis_form(a: Pair, b: Pair, consts: DisjointConstants) -> Fraction:
    if a == b:
        return Fraction(1, 4)
    if set(a) & set(b):
        return Fraction(1, 32)
    return consts.form


def product(x: GriessVector, y: GriessVector, consts: DisjointConstants = DERIVED) -> GriessVector:
    """Bilinear extension of the 1-product on basis vectors."""
    x._check(y)
    out: dict[Pair, Fraction] = {}
    for a, ca in x.coords.items():
        for b, cb in y.coords.items():
            for p, v in _basis_product(a, b, consts).items():
                out[p] = out.get(p, Fraction(0)) + ca * cb * v
    return GriessVector(x.n, out)


def form(x: GriessVector, y: GriessVector, consts: DisjointConstants = DERIVED) -> Fraction:
    x._check(y)
    return sum(
        (ca * cb * _basis_form(a, b, consts) for a, ca in x.coords.items() for b, cb in y.coords.items()),
        Fraction(0),
    )


def central_charge_of(n: int) -> Fraction:
    """2 (w, w)."""
    w = virasoro_vector(n)
    return 2 * form(w, w)


# ------------------------------------------------------- disjoint constants


def _solve(rows: list[list[Fraction]], rhs: list[Fraction], unknowns: int) -> list[Fraction]:
    """Unique solution of an overdetermined consistent linear system, else TheoryViolation."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if rank([r[:unknowns] for r in aug], unknowns) != unknowns:
        raise TheoryViolation("disjoint constants are not determined", {"check": "disjoint solver"})
    if rank(aug, unknowns + 1) != unknowns:
        raise TheoryViolation("disjoint-constant system is inconsistent", {"check": "disjoint solver"})
    m = [list(r) for r in aug]
    top = 0
    for col in range(unknowns):
        k = next(r for r in range(top, len(m)) if m[r][col])
        m[top], m[k] = m[k], m[top]
        m[top] = [v / m[top][col] for v in m[top]]
        for r in range(len(m)):
            if r != top and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[top])]
        top += 1
    return [m[r][-1] for r in range(unknowns)]


def solve_disjoint_constants(n: int = 4) -> DisjointConstants:
    """Solve for the disjoint-pair constants from w*x = 2x and (w, w^{ij}) = 1/4.

    Both conditions are affine in the unknowns, so each residual is evaluated at
    the origin and at the unit vectors to assemble the linear system.
    """
    if n < 3:
        raise BadIndex("disjoint pairs first occur at n = 3")
    w = virasoro_vector(n)
    probes = [DisjointConstants(), DisjointConstants(product_same=Fraction(1)),
              DisjointConstants(product_cross=Fraction(1))]
    rows, rhs = [], []
    for p in pairs(n):
        x = omega(n, *p)
        residual = [(product(w, x, c) - x * 2).vector() for c in probes]
        for k in range(len(residual[0])):
            base = residual[0][k]
            rows.append([residual[1][k] - base, residual[2][k] - base])
            rhs.append(-base)
    alpha, beta = _solve(rows, rhs, 2)
    form_rows, form_rhs = [], []
    for p in pairs(n):
        x = omega(n, *p)
        base = form(w, x, DisjointConstants())
        slope = form(w, x, DisjointConstants(form=Fraction(1))) - base
        form_rows.append([slope])
        form_rhs.append(Fraction(1, 4) - base)
    (d,) = _solve(form_rows, form_rhs, 1)
    return DisjointConstants(product_same=alpha, product_cross=beta, form=d)


# ------------------------------------------------------------------ spectra


def adjoint_matrix(x: GriessVector) -> Matrix:
    """Matrix of y -> x*y in the basis w^{ij} (columns are images)."""
    basis = pairs(x.n)
    cols = [product(x, omega(x.n, *p)).vector() for p in basis]
    return [[cols[c][r] for c in range(len(basis))] for r in range(len(basis))]


def adjoint_spectrum(pair: Iterable[int], n: int) -> list[Fraction]:
    """Eigenvalues of y -> w^{ij} y with multiplicity, in decreasing order."""
    i, j = pair
    a = adjoint_matrix(omega(n, i, j))
    dim = len(a)
    out = []
    for lam in (Fraction(2), HALF, Fraction(0)):
        shifted = mat_add(a, mat_scale(identity(dim), lam), -1)
        out += [lam] * nullity(shifted)
    if len(out) != dim:
        raise TheoryViolation(
            f"ad w^{{{i}{j}}} is not diagonalizable over {{2, 1/2, 0}}",
            {"check": "adjoint spectrum", "n": n, "pair": [i, j], "found": len(out), "dim": dim},
        )
    return out


def gram_matrix(n: int) -> Matrix:
    basis = [omega(n, *p) for p in pairs(n)]
    return [[form(a, b) for b in basis] for a in basis]


def ldl_pivots(mat: Matrix) -> list[Fraction]:
    """Pivots of symmetric Gaussian elimination; all positive iff positive definite."""
    m = [list(r) for r in mat]
    size = len(m)
    piv = []
    for k in range(size):
        p = m[k][k]
        piv.append(p)
        if p <= 0:
            return piv
        for r in range(k + 1, size):
            f = m[r][k] / p
            if f:
                for c in range(k, size):
                    m[r][c] -= f * m[k][c]
    return piv


def invariance_failures(n: int) -> tuple[int, list[tuple[Pair, Pair, Pair]]]:
    """Basis triples (a, b, c) with (a*b, c) != (b, a*c); returns (checked, failures)."""
    basis = pairs(n)
    vec = {p: omega(n, *p) for p in basis}
    bad, checked = [], 0
    for a in basis:
        for b in basis:
            ab = product(vec[a], vec[b])
            for c in basis:
                checked += 1
                if form(ab, vec[c]) != form(vec[b], product(vec[a], vec[c])):
                    bad.append((a, b, c))
    return checked, bad


def griess_report(n: int) -> dict:
    """All exact checks for a given n; 'ok' is False if any asserted identity fails."""
    w = virasoro_vector(n)
    basis = pairs(n)
    checks = {}
    checks["w_is_identity_times_2"] = all(product(w, omega(n, *p)) == omega(n, *p) * 2 for p in basis)
    checks["form_w_wij"] = all(form(w, omega(n, *p)) == Fraction(1, 4) for p in basis)
    checks["form_wij_wij"] = all(form(omega(n, *p), omega(n, *p)) == Fraction(1, 4) for p in basis)
    overlap = [(a, b) for a in basis for b in basis if len(set(a) & set(b)) == 1]
    checks["form_overlap"] = all(form(omega(n, *a), omega(n, *b)) == Fraction(1, 32) for a, b in overlap)
    checks["commutative"] = all(
        product(omega(n, *a), omega(n, *b)) == product(omega(n, *b), omega(n, *a)) for a in basis for b in basis
    )
    triples = list(combinations(range(n + 1), 3))
    checks["form_w3_w3"] = all(form(omega3(n, *t), omega3(n, *t)) == Fraction(3, 5) for t in triples)
    checks["form_w3_wij"] = all(form(omega3(n, i, j, l), omega(n, i, j)) == Fraction(1, 4) for i, j, l in triples)
    checks["wij_w3_is_2wij"] = all(
        product(omega(n, i, j), omega3(n, i, j, l)) == omega(n, i, j) * 2 for i, j, l in triples
    )
    checks["half_eigenvector"] = all(
        product(omega(n, i, j), omega(n, i, l) - omega(n, j, l)) == (omega(n, i, l) - omega(n, j, l)) * HALF
        for i, j, l in triples
    )
    spectrum = adjoint_spectrum((0, 1), n)
    checks["adjoint_spectrum"] = (
        spectrum.count(2) == 1 and spectrum.count(HALF) == n - 1 and spectrum.count(0) == len(basis) - n
    )
    pivots = ldl_pivots(gram_matrix(n))
    checks["gram_positive_definite"] = all(p > 0 for p in pivots)
    c = central_charge_of(n)
    checks["central_charge"] = c == Fraction(n * (n + 1), n + 3)
    report = {
        "n": n,
        "central_charge": str(c),
        "dimension": len(basis),
        "gram_determinant": str(_prod(pivots)),
        "adjoint_spectrum": {"2": spectrum.count(2), "1/2": spectrum.count(HALF), "0": spectrum.count(0)},
        "checks": checks,
    }
    if n <= 4:
        checked, bad = invariance_failures(n)
        report["invariance"] = {"triples_checked": checked, "failures": len(bad),
                                "examples": [[list(p) for p in t] for t in bad[:5]]}
    report["ok"] = all(checks.values())
    return report


def _prod(xs):
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


# --------------------------------------------------- three-index subalgebra


@dataclass(frozen=True)
class ConformalTriple:
    """Action of (w^{ij}, w^{il}, w^{jl}) on one lowest-weight space."""

    name: str
    matrices: tuple[Matrix, Matrix, Matrix]

    @property
    def dim(self) -> int:
        return len(self.matrices[0])

    @property
    def scalars(self) -> tuple[Fraction, Fraction, Fraction] | None:
        if self.dim != 1:
            return None
        return tuple(m[0][0] for m in self.matrices)

    def involutions(self) -> tuple[Matrix, Matrix, Matrix]:
        """lambda = 1 - 4w for each of the three vectors."""
        ident = identity(self.dim)
        return tuple(mat_add(ident, mat_scale(m, 4), -1) for m in self.matrices)


def _mat(rows) -> Matrix:
    return [[Fraction(x) for x in r] for r in rows]


def lemma33_matrices() -> list[ConformalTriple]:
    """The eight lowest-weight actions of the three-index subalgebra: W^1 first, then W^2..W^8."""
    e = Fraction(1, 8)
    w1 = ConformalTriple("W1", (
        _mat([[0, 0], [0, HALF]]),
        _mat([[3 * e, e], [3 * e, e]]),
        _mat([[3 * e, -e], [-3 * e, e]]),
    ))
    o, h, s = Fraction(0), HALF, SIXTEENTH
    scalars = [(o, o, o), (o, s, s), (s, o, s), (s, s, o), (h, s, s), (s, h, s), (s, s, h)]
    out = [w1]
    for idx, triple in enumerate(scalars, start=2):
        out.append(ConformalTriple(f"W{idx}", tuple(_mat([[x]]) for x in triple)))
    return out


def triple_report(t: ConformalTriple) -> dict:
    """Exact relation checks for one triple.

    The quadratic X(X - 1/2) = 0 is asserted on W^1.  The involution checks
    (lambda^2 = 1, braid, and the J-relation for s1 = lambda^{ij},
    s2 = lambda^{jl}) are asserted on triples whose eigenvalues lie in {0, 1/2}.
    """
    out = {"name": t.name, "dim": t.dim}
    if t.scalars is not None:
        out["scalars"] = [str(x) for x in t.scalars]
    zero = [[Fraction(0)] * t.dim for _ in range(t.dim)]
    ident = identity(t.dim)
    if t.dim == 2:
        out["quadratic"] = all(
            matmul(m, mat_add(m, mat_scale(ident, HALF), -1)) == zero for m in t.matrices
        )
    eigen_ok = t.dim == 2 or all(m[0][0] in (0, HALF) for m in t.matrices)
    if eigen_ok:
        lij, lil, ljl = t.involutions()
        s1, s2 = lij, ljl
        out["square"] = all(matmul(x, x) == ident for x in (lij, lil, ljl))
        out["braid"] = matmul(matmul(s1, s2), s1) == matmul(matmul(s2, s1), s2)
        out["conjugate"] = matmul(matmul(s1, s2), s1) == lil
        e = mat_add(mat_add(s1, s2), matmul(matmul(s2, s1), s2))
        out["j_relation"] = is_zero_matrix(matmul(e, mat_add(e, mat_scale(ident, 3), -1)))
    out["ok"] = all(v for k, v in out.items() if isinstance(v, bool))
    return out
