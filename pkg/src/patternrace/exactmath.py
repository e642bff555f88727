"""Exact scalars, dense univariate polynomials, rational functions and
determinants of polynomial matrices.

Scalars are :class:`fractions.Fraction` everywhere; nothing in this module
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Sequence, Union

from .errors import ZeroConstantDenominator

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Poly",
    "RatFn",
    "PolyMatrix",
    "det",
    "poly_eval",
    "poly_derivative",
    "series",
]


class Poly:
    """Dense polynomial in ``s``; ``coeffs[k]`` is the coefficient of ``s**k``.

    The zero polynomial has an empty coefficient tuple. Instances are
    immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def const(cls, x: Scalar) -> "Poly":
        return cls((x,))

    @classmethod
    def monomial(cls, coeff: Scalar, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self._c) if k)

    @staticmethod
    def _lift(other: object) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Poly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly(a + b for a, b in zip_longest(self._c, o._c, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self._c)

    def __sub__(self, other: object) -> "Poly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Poly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "Poly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not self._c or not o._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        lead = other._c[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            f = rem[k + dq] / lead
            quot[k] = f
            if f:
                for j, b in enumerate(other._c):
                    rem[k + j] -= f * b
        return Poly(quot), Poly(rem[:dq])

    def exquo(self, other: "Poly") -> "Poly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "s" if k == 1 else f"s^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_eval(a: Poly, x: Scalar) -> Fraction:
    return a(x)


def poly_derivative(a: Poly) -> Poly:
    return a.derivative()


S = Poly((0, 1))
ONE = Poly.const(1)


@dataclass(frozen=True)
class RatFn:
    """Quotient ``numer / denom`` of two polynomials, kept unreduced."""

    numer: Poly
    denom: Poly

    def __post_init__(self) -> None:
        if self.denom.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    def __call__(self, x: Scalar) -> Fraction:
        d = self.denom(x)
        if not d:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return self.numer(x) / d

    def series(self, n_terms: int) -> list[Fraction]:
        """First ``n_terms`` power-series coefficients by exact long division."""
        d = self.denom.coeffs
        if not d[0]:
            raise ZeroConstantDenominator("denominator vanishes at s = 0")
        d0 = d[0]
        out: list[Fraction] = []
        for k in range(n_terms):
            acc = self.numer.coeff(k)
            for j in range(1, min(k, len(d) - 1) + 1):
                acc -= d[j] * out[k - j]
            out.append(acc / d0)
        return out


def series(f: RatFn, n_terms: int) -> list[Fraction]:
    return f.series(n_terms)


class PolyMatrix:
    """Square matrix of :class:`Poly` entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Union[Poly, Scalar]]]) -> None:
        m = len(rows)
        if m < 1 or any(len(r) != m for r in rows):
            raise ValueError("PolyMatrix must be square with m >= 1")
        self._rows = tuple(tuple(Poly._lift(x) for x in r) for r in rows)

    @classmethod
    def identity(cls, m: int) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(m)] for i in range(m)])

    @property
    def m(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Poly, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self._rows[i][j]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self._rows)

    def replace_column(self, j: int, col: Sequence[Union[Poly, Scalar]]) -> "PolyMatrix":
        if len(col) != self.m:
            raise ValueError("column length mismatch")
        return PolyMatrix([r[:j] + (col[i],) + r[j + 1:] for i, r in enumerate(self._rows)])

    def swap_columns(self, a: int, b: int) -> "PolyMatrix":
        rows = []
        for r in self._rows:
            r = list(r)
            r[a], r[b] = r[b], r[a]
            rows.append(r)
        return PolyMatrix(rows)

    def evaluate(self, x: Scalar) -> list[list[Fraction]]:
        return [[p(x) for p in r] for r in self._rows]

    def is_identity(self) -> bool:
        return all(
            p == (1 if i == j else 0)
            for i, r in enumerate(self._rows)
            for j, p in enumerate(r)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(p) for p in r) for r in self._rows)
        return f"PolyMatrix([{body}])"

    def det(self, method: str = "auto") -> Poly:
        return det(self, method)


COFACTOR_MAX = 6


def _det_cofactor(rows: tuple[tuple[Poly, ...], ...]) -> Poly:
    # Laplace expansion down the rows, memoized on the set of columns still free.
    m = len(rows)

    @lru_cache(maxsize=None)
    def minor(row: int, free: int) -> Poly:
        if row == m:
            return ONE
        acc = Poly()
        sign = 1
        for j in range(m):
            if free >> j & 1:
                entry = rows[row][j]
                if entry:
                    sub = minor(row + 1, free & ~(1 << j))
                    acc = acc + entry * sub if sign > 0 else acc - entry * sub
                sign = -sign
        return acc

    return minor(0, (1 << m) - 1)


def _det_bareiss(rows: tuple[tuple[Poly, ...], ...]) -> Poly:
    a = [list(r) for r in rows]
    m = len(a)
    sign = 1
    prev = ONE
    for k in range(m - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, m):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exquo(prev)
        prev = a[k][k]
    return a[m - 1][m - 1] if sign > 0 else -a[m - 1][m - 1]


def det(matrix: PolyMatrix, method: str = "auto") -> Poly:
    """Exact determinant.

    ``method`` is ``"cofactor"``, ``"bareiss"`` (fraction-free elimination over
    the polynomial ring) or ``"auto"``, which uses cofactor expansion up to
    6x6 and Bareiss above.
    """
    if method == "auto":
        method = "cofactor" if matrix.m <= COFACTOR_MAX else "bareiss"
    if method == "cofactor":
        return _det_cofactor(matrix.rows)
    if method == "bareiss":
        return _det_bareiss(matrix.rows)
    raise ValueError(f"unknown determinant method {method!r}")
