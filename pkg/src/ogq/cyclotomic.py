"""Exact arithmetic in cyclotomic fields Q(w), w a primitive N-th root of unity.

Elements are stored on the power basis 1, w, ..., w^(phi(N)-1) of the quotient
Q[x]/(Phi_N(x)) with Fraction coefficients, so every operation is exact.  The
N-th cyclotomic polynomial Phi_N is obtained by exact division of x^N - 1 by
the product of Phi_d over proper divisors d of N, and inverses come from the
extended Euclidean algorithm against Phi_N, which is irreducible over Q.

>>> w = root_of_unity(8, 1)
>>> ((w + w.invert()) ** 2).as_rational()
Fraction(2, 1)
"""

from __future__ import annotations

import cmath
import dataclasses
from fractions import Fraction
from functools import lru_cache


class OrderMismatchError(ValueError):
    """Raised when two elements of different cyclotomic fields are combined."""


class NotRationalError(ArithmeticError):
    """Raised when a rational value is demanded of a non-rational element."""


def _exact_int_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Long division of integer polynomials, constant term first.  The divisor
    # is monic, and the quotient must be exact.
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dd]
        if c:
            quot[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_order, constant term first, monic.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(8)
    (1, 0, 0, 0, 1)
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    poly = [-1] + [0] * (order - 1) + [1]
    quot = list(poly)
    for d in range(1, order):
        if order % d == 0:
            quot = _exact_int_div(quot, cyclotomic_polynomial(d))
    return tuple(quot)


@lru_cache(maxsize=None)
def field_degree(order: int) -> int:
    """Degree phi(order) of the cyclotomic field of the given order."""
    return len(cyclotomic_polynomial(order)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(order: int) -> tuple[tuple[int, ...], ...]:
    # rows[i] holds the coefficients of x^(phi+i) reduced mod Phi_order,
    # for i in 0..phi-2, enough to reduce any product of two reduced elements.
    mod = cyclotomic_polynomial(order)
    phi = len(mod) - 1
    if phi == 1:
        return ()
    rows: list[tuple[int, ...]] = []
    cur = [-c for c in mod[:phi]]
    rows.append(tuple(cur))
    for _ in range(phi - 2):
        cur = [0] + cur
        lead = cur.pop()
        if lead:
            cur = [c + lead * r for c, r in zip(cur, rows[0])]
        rows.append(tuple(cur))
    return tuple(rows)


def _poly_inverse(a: tuple[Fraction, ...], order: int) -> tuple[Fraction, ...]:
    # Extended Euclid for u*a + v*Phi = gcd; Phi_order is irreducible over Q,
    # so any nonzero a is invertible and gcd is a nonzero constant.
    def degree(p: list[Fraction]) -> int:
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    mod = [Fraction(c) for c in cyclotomic_polynomial(order)]
    r0, r1 = mod, list(a)
    u0, u1 = [Fraction(0)], [Fraction(1)]
    while degree(r1) > 0:
        d0, d1 = degree(r0), degree(r1)
        quot = [Fraction(0)] * (d0 - d1 + 1)
        rem = list(r0)
        for k in range(d0 - d1, -1, -1):
            c = rem[k + d1] / r1[d1]
            quot[k] = c
            if c:
                for i in range(d1 + 1):
                    rem[k + i] -= c * r1[i]
        new_u = list(u0) + [Fraction(0)] * max(0, len(quot) + len(u1) - 1 - len(u0))
        for i, q in enumerate(quot):
            if q:
                for j, c in enumerate(u1):
                    new_u[i + j] -= q * c
        r0, r1 = r1, rem
        u0, u1 = u1, new_u
    lead = degree(r1)
    if lead < 0:
        raise ZeroDivisionError("inverse of zero in cyclotomic field")
    scale = r1[0]
    phi = len(mod) - 1
    out = [Fraction(0)] * phi
    for i, c in enumerate(u1[:phi]):
        out[i] = c / scale
    return tuple(out)


@dataclasses.dataclass(frozen=True, eq=False)
class CycloNum:
    """An element of Q(w) for w a fixed primitive root of unity.

    `coeffs` always has length phi(order).  Mixed arithmetic with int and
    Fraction operands is supported and treats them as rational constants.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            if self.order == other.order:
                return self.coeffs == other.coeffs
            return (
                self.is_rational()
                and other.is_rational()
                and self.coeffs[0] == other.coeffs[0]
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def _check(self, other: "CycloNum") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"cannot combine roots of unity of orders {self.order} and {other.order}"
            )

    @staticmethod
    def rational(order: int, value: Fraction | int) -> "CycloNum":
        coeffs = [Fraction(0)] * field_degree(order)
        coeffs[0] = Fraction(value)
        return CycloNum(order, tuple(coeffs))

    @staticmethod
    def _coerce(order: int, value) -> "CycloNum | None":
        if isinstance(value, CycloNum):
            return value
        if isinstance(value, (int, Fraction)):
            return CycloNum.rational(order, value)
        return None

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        o = self._coerce(self.order, other)
        if o is None:
            return NotImplemented
        self._check(o)
        return CycloNum(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(self.order, other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(self.order, other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CycloNum.rational(self.order, 0)
            return CycloNum(self.order, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycloNum):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        phi = len(a)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        rows = _reduction_rows(self.order)
        out = conv[:phi]
        for k in range(2 * phi - 2, phi - 1, -1):
            c = conv[k]
            if c:
                row = rows[k - phi]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CycloNum(self.order, tuple(out))

    __rmul__ = __mul__

    def invert(self) -> "CycloNum":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        return CycloNum(self.order, _poly_inverse(self.coeffs, self.order))

    def __truediv__(self, other):
        o = self._coerce(self.order, other)
        if o is None:
            return NotImplemented
        return self * o.invert()

    def __rtruediv__(self, other):
        o = self._coerce(self.order, other)
        if o is None:
            return NotImplemented
        return o * self.invert()

    def __pow__(self, exponent: int) -> "CycloNum":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.invert()
            exponent = -exponent
        result = CycloNum.rational(self.order, 1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        """The element as a Fraction, if it lies in Q.

        >>> root_of_unity(4, 2).as_rational()
        Fraction(-1, 1)
        """
        if not self.is_rational():
            raise NotRationalError(f"element is not rational: {self!r}")
        return self.coeffs[0]

    def embed_complex(self) -> complex:
        """Numerical image under w -> exp(2*pi*i/order)."""
        root = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * root + complex(c)
        return acc

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                elif i == 1:
                    terms.append(f"{c}*w" if c != 1 else "w")
                else:
                    terms.append(f"{c}*w^{i}" if c != 1 else f"w^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"CycloNum({self.order}; {body})"


def root_of_unity(order: int, power: int = 1) -> CycloNum:
    """w^power in Q(w), any integer power.

    >>> root_of_unity(4, 1) ** 2 == root_of_unity(4, 2)
    True
    """
    power %= order
    phi = field_degree(order)
    if power < phi:
        coeffs = [Fraction(0)] * phi
        coeffs[power] = Fraction(1)
        return CycloNum(order, tuple(coeffs))
    if phi == 1:
        # Orders 1 and 2 are rational: w is 1 or -1.
        return CycloNum.rational(order, (-1) ** power if order == 2 else 1)
    w = CycloNum(order, tuple(Fraction(int(i == 1)) for i in range(phi)))
    return w ** power


def zero(order: int) -> CycloNum:
    return CycloNum.rational(order, 0)


def one(order: int) -> CycloNum:
    return CycloNum.rational(order, 1)
