"""Exact rational scalars and truncated formal power series in q.

A series stores ``q^offset * sum_{d=0}^{order} a_d q^d``.  The rational
offset carries fractional exponents such as ``q^(1/16)`` so the coefficient
run stays dense.  ``QSeries`` has rational coefficients; ``TwoVarSeries`` has
Laurent polynomials in ``z`` as coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import IncompatibleOffset, NotAUnit, NumericalInconsistency

Rational = Fraction


def rational_str(x) -> str:
    """Serialize a rational as ``"p/q"`` (``"p"`` when ``q == 1``)."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class LaurentPoly:
    """Laurent polynomial in z stored as (lowest exponent, dense coefficient run)."""

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int = 0, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            self.low = 0
            self.coeffs: tuple[Fraction, ...] = ()
        else:
            self.low = int(low) + start
            self.coeffs = tuple(cs[start:end])

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls(exponent, (coeff,))

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls(0, (c,))

    @classmethod
    def from_dict(cls, terms: Mapping[int, object]) -> "LaurentPoly":
        terms = {int(e): Fraction(c) for e, c in terms.items() if c != 0}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, exponent: int) -> Fraction:
        i = exponent - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def items(self):
        """(exponent, coefficient) pairs with nonzero coefficient."""
        return [(self.low + i, c) for i, c in enumerate(self.coeffs) if c]

    def to_dict(self) -> dict[int, Fraction]:
        return dict(self.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __neg__(self):
        return LaurentPoly(self.low, [-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [Fraction(0)] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.low, [c * other for c in self.coeffs])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.low + other.low, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by z^k."""
        return LaurentPoly(self.low + k, self.coeffs) if self.coeffs else self

    def reflect(self) -> "LaurentPoly":
        """Substitute z -> 1/z."""
        if not self.coeffs:
            return self
        return LaurentPoly(-self.high, reversed(self.coeffs))

    def at_one(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise NotAUnit(f"{self!r} is not a unit in Q[z, 1/z]")
        return LaurentPoly(-self.low, (1 / self.coeffs[0],))

    def divide_by_z_minus_zinv(self) -> "LaurentPoly":
        """Exact quotient by (z - 1/z); raises if the division leaves a remainder."""
        if not self.coeffs:
            return self
        # P_e = Q_{e-1} - Q_{e+1}, solved from the top exponent down.
        q: dict[int, Fraction] = {}
        for e in range(self.high, self.low + 1, -1):
            q[e - 1] = self[e] + q.get(e + 1, Fraction(0))
        result = LaurentPoly.from_dict(q)
        check = result.shift(1) - result.shift(-1)
        if check != self:
            raise NumericalInconsistency(f"{self!r} is not divisible by z - 1/z")
        return result

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"{c}*z^{e}" for e, c in self.items())
        return f"LaurentPoly({terms})"

    def to_json(self) -> dict[str, str]:
        return {str(e): rational_str(c) for e, c in self.items()}


class _Series:
    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs: Sequence, offset=0):
        if len(coeffs) == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = tuple(self._coerce(c) for c in coeffs)
        self.offset = Fraction(offset)

    # ring hooks, overridden per coefficient type
    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @staticmethod
    def _is_zero(c) -> bool:
        raise NotImplementedError

    @staticmethod
    def _zero():
        raise NotImplementedError

    @staticmethod
    def _unit_inverse(c):
        raise NotImplementedError

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int, offset=0):
        return cls([cls._zero()] * (order + 1), offset)

    @classmethod
    def constant(cls, c, order: int, offset=0):
        return cls([c] + [cls._zero()] * order, offset)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object], order: int, offset=0):
        """Build from {relative exponent: coefficient}; exponents above order are dropped."""
        cs = [cls._zero()] * (order + 1)
        for d, c in terms.items():
            if 0 <= d <= order:
                cs[d] = cs[d] + cls._coerce(c)
            elif d < 0:
                raise ValueError(f"negative relative exponent {d}")
        return cls(cs, offset)

    def is_zero(self) -> bool:
        return all(self._is_zero(c) for c in self.coeffs)

    def coefficient(self, d: int):
        """Coefficient of q^(offset + d)."""
        if d > self.order:
            raise IndexError(f"q^(offset+{d}) lies beyond truncation order {self.order}")
        if d < 0:
            return self._zero()
        return self.coeffs[d]

    def at_exponent(self, e):
        """Coefficient of the absolute power q^e."""
        d = Fraction(e) - self.offset
        if d.denominator != 1:
            return self._zero()
        return self.coefficient(int(d))

    def leading(self):
        """(absolute exponent, coefficient) of the first nonzero term, or None."""
        for d, c in enumerate(self.coeffs):
            if not self._is_zero(c):
                return self.offset + d, c
        return None

    def truncate(self, order: int):
        if order > self.order:
            raise ValueError("truncation never extends precision")
        return type(self)(self.coeffs[: order + 1], self.offset)

    def with_offset(self, offset):
        return type(self)(self.coeffs, offset)

    def _promote(self, other):
        if isinstance(other, _Series):
            if type(other) is type(self):
                return self, other
            if isinstance(self, QSeries):
                return self.to_two_var(), other
            return self, other.to_two_var()
        return None

    def _aligned(self, other):
        a, b = self, other
        if a.is_zero() and not b.is_zero():
            a = a.with_offset(b.offset)
        elif b.is_zero() and not a.is_zero():
            b = b.with_offset(a.offset)
        diff = b.offset - a.offset
        if diff.denominator != 1:
            raise IncompatibleOffset(f"offsets {a.offset} and {b.offset} differ by a non-integer")
        shift = int(diff)
        sa, sb = (0, shift) if shift >= 0 else (-shift, 0)
        order = min(a.order + sa, b.order + sb)
        zero = self._zero()

        def padded(s, pad):
            run = [zero] * pad + list(s.coeffs)
            return run[: order + 1]

        return min(a.offset, b.offset), padded(a, sa), padded(b, sb), order

    def __add__(self, other):
        pair = self._promote(other)
        if pair is None:
            if isinstance(other, (int, Fraction)) and other == 0:
                return self
            return NotImplemented
        a, b = pair
        if a is not self:
            return a + b
        offset, xs, ys, _ = a._aligned(b)
        return type(a)([x + y for x, y in zip(xs, ys)], offset)

    def __radd__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return type(self)([-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        if not isinstance(other, _Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self)([c * other for c in self.coeffs], self.offset)
        if isinstance(other, LaurentPoly) and isinstance(self, TwoVarSeries):
            return type(self)([c * other for c in self.coeffs], self.offset)
        pair = self._promote(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        order = min(a.order, b.order)
        zero = self._zero()
        out = [zero] * (order + 1)
        bs = b.coeffs
        for i in range(order + 1):
            ai = a.coeffs[i]
            if a._is_zero(ai):
                continue
            for j in range(order + 1 - i):
                bj = bs[j]
                if not b._is_zero(bj):
                    out[i + j] = out[i + j] + ai * bj
        return type(a)(out, a.offset + b.offset)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return invert_unit(self) ** (-k)
        result = type(self).constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.offset, self.coeffs))

    def agrees_with(self, other) -> bool:
        """Equal on every exponent both operands determine."""
        return (self - other).is_zero()


class QSeries(_Series):
    """Truncated power series in q with rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    @staticmethod
    def _is_zero(c) -> bool:
        return c == 0

    @staticmethod
    def _zero():
        return Fraction(0)

    @staticmethod
    def _unit_inverse(c):
        if c == 0:
            raise NotAUnit("constant term is zero")
        return 1 / c

    def to_two_var(self) -> "TwoVarSeries":
        return TwoVarSeries([LaurentPoly.constant(c) for c in self.coeffs], self.offset)

    def __repr__(self):
        return f"QSeries(offset={self.offset}, coeffs=[{', '.join(map(str, self.coeffs))}])"

    def to_json(self) -> dict:
        return {
            "offset": rational_str(self.offset),
            "order": self.order,
            "coefficients": [rational_str(c) for c in self.coeffs],
        }


class TwoVarSeries(_Series):
    """Truncated power series in q whose coefficients are Laurent polynomials in z."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, LaurentPoly):
            return c
        return LaurentPoly.constant(c)

    @staticmethod
    def _is_zero(c) -> bool:
        return c.is_zero()

    @staticmethod
    def _zero():
        return LaurentPoly()

    @staticmethod
    def _unit_inverse(c):
        return c.inverse()

    def z_component(self, e: int) -> QSeries:
        """The q-series multiplying z^e."""
        return QSeries([c[e] for c in self.coeffs], self.offset)

    def z_support(self) -> list[int]:
        exps = set()
        for c in self.coeffs:
            exps.update(e for e, _ in c.items())
        return sorted(exps)

    def at_z_one(self) -> QSeries:
        return QSeries([c.at_one() for c in self.coeffs], self.offset)

    def reflect_z(self) -> "TwoVarSeries":
        return TwoVarSeries([c.reflect() for c in self.coeffs], self.offset)

    def map_coefficients(self, fn) -> "TwoVarSeries":
        return TwoVarSeries([fn(c) for c in self.coeffs], self.offset)

    def __repr__(self):
        return f"TwoVarSeries(offset={self.offset}, coeffs={list(self.coeffs)!r})"

    def to_json(self) -> dict:
        return {
            "offset": rational_str(self.offset),
            "order": self.order,
            "coefficients": [c.to_json() for c in self.coeffs],
        }


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def invert_unit(a):
    """Multiplicative inverse of a series whose first stored coefficient is a unit."""
    c0 = a.coeffs[0]
    if a._is_zero(c0):
        raise NotAUnit("leading coefficient is zero")
    inv0 = a._unit_inverse(c0)
    out = [inv0]
    for d in range(1, a.order + 1):
        acc = a._zero()
        for i in range(1, d + 1):
            ci = a.coeffs[i]
            if not a._is_zero(ci):
                acc = acc + ci * out[d - i]
        out.append(-(inv0 * acc))
    return type(a)(out, -a.offset)


def euler_product(order: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) truncated at q^order."""
    cs = [Fraction(0)] * (order + 1)
    cs[0] = Fraction(1)
    for n in range(1, order + 1):
        for d in range(order, n - 1, -1):
            cs[d] -= cs[d - n]
    return QSeries(cs)


def euler_inverse(order: int) -> QSeries:
    """1 / prod_{n>=1} (1 - q^n): the partition generating function."""
    if order < 0:
        raise ValueError("order must be non-negative")
    counts = [0] * (order + 1)
    counts[0] = 1
    for part in range(1, order + 1):
        for d in range(part, order + 1):
            counts[d] += counts[d - part]
    return QSeries(counts)
