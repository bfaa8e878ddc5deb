"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`Cyc` stores its conductor ``N`` and the coordinates of the value in
the power basis ``1, z, ..., z^(phi(N)-1)`` of ``Q[z]/(Phi_N)``, where ``z``
stands for ``exp(2*pi*i/N)``.  Operands with different conductors are embedded
into the field of conductor ``lcm`` before they are combined.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

CONDUCTOR_CAP = 64

Rational = Union[int, Fraction]


class CapExceeded(ValueError):
    pass


def _check_conductor(n: int, cap: int | None) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"conductor must be a positive integer, got {n!r}")
    limit = CONDUCTOR_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(f"conductor {n} exceeds cap {limit}")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; coefficients low -> high
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j, dc in enumerate(den):
                num[k - dd + j] -= c * dc
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_exact_div(poly, _cyclotomic(d))
    return tuple(poly)


def cyclotomic_polynomial(n: int, cap: int | None = None) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    _check_conductor(n, cap)
    return _cyclotomic(n)


def totient(n: int) -> int:
    return len(_cyclotomic(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of z^j for j = 0..n-1."""
    phi_poly = cyclotomic_polynomial(n)
    d = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (d - 1) if d > 0 else []
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z, then reduce the overflow with the monic Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi_poly[:-1])]
    return tuple(rows)


def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _normalized_traces(n: int) -> tuple[Fraction, ...]:
    # Tr(z^j) / phi(n); independent of the ambient conductor
    out = []
    for j in range(totient(n)):
        m = n // math.gcd(n, j)
        out.append(Fraction(_mobius(m), totient(m)))
    return tuple(out)


class Cyc:
    """An element of Q(zeta_N) in canonical power-basis form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable[Rational]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        _check_conductor(conductor, None)
        if len(coeffs) != totient(conductor):
            raise ValueError(
                f"expected {totient(conductor)} coordinates for conductor {conductor}, "
                f"got {len(coeffs)}"
            )
        self.conductor = conductor
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple[Fraction, ...]) -> Cyc:
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, q: Rational) -> Cyc:
        return cls._raw(1, (Fraction(q),))

    @classmethod
    def coerce(cls, value) -> Cyc:
        if isinstance(value, Cyc):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Cyc")

    # -- conductor handling -------------------------------------------------

    def embed(self, n: int) -> Cyc:
        """The same number written in Q(zeta_n); n must be a multiple of the conductor."""
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError(f"{n} is not a multiple of conductor {self.conductor}")
        _check_conductor(n, None)
        table = _power_table(n)
        step = n // self.conductor
        out = [Fraction(0)] * totient(n)
        for j, c in enumerate(self.coeffs):
            if c:
                for k, t in enumerate(table[(j * step) % n]):
                    if t:
                        out[k] += c * t
        return Cyc._raw(n, tuple(out))

    @staticmethod
    def _align(a: Cyc, b: Cyc) -> tuple[Cyc, Cyc]:
        if a.conductor == b.conductor:
            return a, b
        n = math.lcm(a.conductor, b.conductor)
        return a.embed(n), b.embed(n)

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            return Cyc._raw(self.conductor, (self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = Cyc._align(self, other)
        return Cyc._raw(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyc:
        return Cyc._raw(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc._raw(self.conductor, tuple(x * other for x in self.coeffs))
        if not isinstance(other, Cyc):
            return NotImplemented
        if other.conductor == 1:
            return self * other.coeffs[0]
        if self.conductor == 1:
            return other * self.coeffs[0]
        a, b = Cyc._align(self, other)
        n = a.conductor
        d = len(a.coeffs)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        table = _power_table(n)
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for m, t in enumerate(table[k % n]):
                    if t:
                        out[m] += c * t
        return Cyc._raw(n, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> Cyc:
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.conductor
        d = len(self.coeffs)
        if d == 1:
            return Cyc._raw(n, (1 / self.coeffs[0],))
        # column k of the multiplication matrix is self * z^k
        cols = []
        for k in range(d):
            basis = Cyc._raw(n, tuple(Fraction(int(i == k)) for i in range(d)))
            cols.append((self * basis).coeffs)
        rows = [[cols[k][i] for k in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        return Cyc._raw(n, tuple(_solve_square(rows)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, Cyc):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyc.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> Cyc:
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = Cyc._align(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # the normalized trace does not depend on the conductor used
        traces = _normalized_traces(self.conductor)
        return hash(sum((c * t for c, t in zip(self.coeffs, traces)), Fraction(0)))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    # -- conversion ---------------------------------------------------------

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * j / n) for j, c in enumerate(self.coeffs) if c),
            0j,
        )

    def __str__(self) -> str:
        parts = ",".join(f"{c.numerator}/{c.denominator}" for c in self.coeffs)
        return f"{self.conductor}:{parts}"

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Cyc({self.coeffs[0]})"
        return f"Cyc('{self}')"

    @classmethod
    def parse(cls, text: str) -> Cyc:
        """Inverse of ``str``: ``"N:c0,c1,..."`` with rational coordinates."""
        try:
            head, _, body = text.strip().partition(":")
            n = int(head)
            items = [s for s in body.split(",") if s.strip()]
            return cls(n, [Fraction(s.strip()) for s in items])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed cyclotomic number {text!r}: {exc}") from None


def _solve_square(rows: list[list[Fraction]]) -> list[Fraction]:
    d = len(rows)
    for col in range(d):
        piv = next(r for r in range(col, d) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(d):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][d] for i in range(d)]


def root_of_unity(k: int, n: int) -> Cyc:
    """zeta_n ** k in canonical form."""
    _check_conductor(n, None)
    return Cyc._raw(n, tuple(Fraction(c) for c in _power_table(n)[k % n]))


def zeta(n: int) -> Cyc:
    return root_of_unity(1, n)


ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)


def cyc_add(a: Cyc, b: Cyc) -> Cyc:
    return a + b


def cyc_mul(a: Cyc, b: Cyc) -> Cyc:
    return a * b


def cyc_inv(a: Cyc) -> Cyc:
    return a.inverse()
