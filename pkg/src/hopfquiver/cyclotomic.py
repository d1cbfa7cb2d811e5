"""Exact arithmetic in the cyclotomic rationals Q(zeta_m).

A scalar is a vector of rationals of length phi(m), the coordinates in the
power basis 1, z, ..., z^(phi(m)-1) of the m-th cyclotomic field, kept fully
reduced modulo the m-th cyclotomic polynomial.  Equality is therefore literal
coordinate comparison and every test in the library is exact.  m = 1 and
m = 2 degenerate to the plain rationals (with z = 1 and z = -1).

Rational coordinates use Fraction, so products of long chains of cocycle
values never overflow or lose precision.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import FieldDivisionError, RootNotInField

RationalLike = Union[int, str, Fraction]
ScalarLike = Union["Scalar", int, Fraction]


def _exact_poly_div(num: list[int], den: Sequence[int]) -> list[int]:
    """Divide integer polynomials (ascending coefficients, den monic)."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dd]
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("polynomial division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, ascending, monic."""
    if m < 1:
        raise ValueError("cyclotomic order must be >= 1")
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_poly_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _parse_rational(v: RationalLike) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a rational number")


class FieldContext:
    """Shared context for scalars of one cyclotomic order m."""

    __slots__ = ("order", "degree", "modulus")

    def __init__(self, m: int):
        if not isinstance(m, int) or m < 1:
            raise ValueError("field order must be a positive integer")
        self.order = m
        self.modulus = cyclotomic_polynomial(m)
        self.degree = len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, FieldContext) and other.order == self.order

    def __hash__(self):
        return hash(("FieldContext", self.order))

    def __repr__(self):
        return f"FieldContext(m={self.order})"

    def zero(self) -> "Scalar":
        return Scalar(self, (Fraction(0),) * self.degree)

    def one(self) -> "Scalar":
        return self.scalar(1)

    @property
    def zeta(self) -> "Scalar":
        """The distinguished primitive m-th root of unity (= 1 when m = 1)."""
        return self.root_of_unity(1)

    def root_of_unity(self, k: int) -> "Scalar":
        """zeta^k, reduced."""
        k %= self.order
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return Scalar(self, _reduce(self.modulus, self.degree, coeffs))

    def nth_root(self, n: int, power: int = 1) -> "Scalar":
        """A primitive n-th root of unity raised to `power`; needs n | m."""
        if n < 1 or self.order % n != 0:
            raise RootNotInField(f"no primitive {n}-th root of unity in Q(zeta_{self.order})")
        return self.root_of_unity((self.order // n) * power)

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, "p/q" string, or coordinate list."""
        if isinstance(value, Scalar):
            if value.ctx != self:
                raise ValueError("scalar belongs to a different field context")
            return value
        if isinstance(value, (int, str, Fraction)):
            coeffs = [_parse_rational(value)] + [Fraction(0)] * (self.degree - 1)
            return Scalar(self, tuple(coeffs))
        if isinstance(value, (list, tuple)):
            coeffs = [_parse_rational(v) for v in value]
            if len(coeffs) > self.degree:
                coeffs = list(_reduce(self.modulus, self.degree, coeffs))
            coeffs += [Fraction(0)] * (self.degree - len(coeffs))
            return Scalar(self, tuple(coeffs))
        raise TypeError(f"cannot interpret {value!r} as a scalar")

    def from_json(self, data) -> "Scalar":
        """Parse the JSON form: "p/q" string, integer, or coordinate array."""
        return self.scalar(data)


@lru_cache(maxsize=None)
def field_context(m: int) -> FieldContext:
    """Return the (cached) arithmetic context for Q(zeta_m)."""
    return FieldContext(m)


def _reduce(modulus: Sequence[int], degree: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce an ascending coefficient list modulo the (monic) modulus."""
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, degree - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(degree):
                if modulus[j]:
                    coeffs[i - degree + j] -= c * modulus[j]
        coeffs.pop()
    while len(coeffs) < degree:
        coeffs.append(Fraction(0))
    return tuple(coeffs)


class Scalar:
    """An element of Q(zeta_m) in reduced power-basis coordinates.

    Immutable; all operations are pure, so scalars can be shared freely.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: tuple[Fraction, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ctx.order == other.ctx.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.order, self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ctx.order != self.ctx.order:
                raise ValueError("cannot mix scalars of different cyclotomic orders")
            return other
        return self.ctx.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        return Scalar(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Scalar(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Scalar(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        d = self.ctx.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Scalar(self.ctx, _reduce(self.ctx.modulus, d, prod))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise FieldDivisionError("inverse of zero")
        # Invert in Q[x] / (modulus); the cyclotomic polynomial is
        # irreducible over Q so the gcd with any nonzero residue is constant.
        a = list(self.coeffs)
        b = [Fraction(c) for c in self.ctx.modulus]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        while _poly_degree(b) >= 0:
            q = _poly_quotient(a, b)
            a, b = b, _poly_sub(a, _poly_mul(q, b))
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = a[_poly_degree(a)]
        inv = [c / lead for c in s0]
        return Scalar(self.ctx, _reduce(self.ctx.modulus, self.ctx.degree, inv))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- rendering ----------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self.format()!r}, m={self.ctx.order})"

    def format(self) -> str:
        """Readable polynomial form in z (the primitive m-th root)."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                body = str(c)
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 or k == 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def to_json(self):
        """Canonical JSON form: "p/q" when rational, else coordinate array."""
        if not any(self.coeffs[1:]):
            return str(self.coeffs[0])
        return [str(c) for c in self.coeffs]


def _poly_degree(p: list[Fraction]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_quotient(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    da, db = _poly_degree(a), _poly_degree(b)
    if da < db:
        return [Fraction(0)]
    rem = list(a)
    quot = [Fraction(0)] * (da - db + 1)
    lead = b[db]
    for i in range(da - db, -1, -1):
        c = rem[i + db] / lead
        quot[i] = c
        if c:
            for j in range(db + 1):
                rem[i + j] -= c * b[j]
    return quot
