"""Univariate polynomials over Q.

A :class:`Poly` is stored as a list of integer coefficients (lowest degree
first) together with one positive common denominator, so that all the heavy
lifting happens in integer kernels.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable

import numpy as np

from ._kernels import K

BigRat = Fraction


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class Poly:
    """Immutable polynomial with rational coefficients."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in fr]
        self._set(K.strip(num), den)

    def _set(self, num: list, den: int) -> None:
        if not num:
            den = 1
        elif den != 1:
            g = gcd(K.content(num), den)
            if g != 1:
                num = [c // g for c in num]
                den //= g
        self._n = num
        self._d = den
        self._hash = None

    @classmethod
    def _raw(cls, num: list, den: int = 1) -> "Poly":
        """Build from integer coefficients and a positive denominator."""
        p = object.__new__(cls)
        p._set(K.strip(num), den)
        return p

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw([0, 1])

    @classmethod
    def const(cls, c) -> "Poly":
        c = Fraction(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        c = Fraction(c)
        return cls._raw([0] * k + [c.numerator], c.denominator)

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        d = self._d
        return tuple(Fraction(c, d) for c in self._n)

    @property
    def int_coeffs(self) -> tuple:
        """Integer numerator coefficients; the polynomial is these over ``den``."""
        return tuple(self._n)

    @property
    def den(self) -> int:
        return self._d

    @property
    def degree(self) -> int:
        return len(self._n) - 1

    @property
    def lc(self) -> Fraction:
        return Fraction(self._n[-1], self._d) if self._n else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return Fraction(self._n[k], self._d) if 0 <= k < len(self._n) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._n

    def is_const(self) -> bool:
        return len(self._n) <= 1

    def __bool__(self) -> bool:
        return bool(self._n)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._d == other._d and self._n == other._n
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(self._n), self._d))
        return self._hash

    def sort_key(self) -> tuple:
        return (len(self._n), tuple(self._n), self._d)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(o) -> "Poly | None":
        if isinstance(o, Poly):
            return o
        if isinstance(o, (int, Fraction)) or isinstance(o, Rational):
            return Poly.const(o)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return Poly._raw(K.add(self._n, o._n), self._d)
        d = _lcm(self._d, o._d)
        return Poly._raw(K.lincomb(self._n, d // self._d, o._n, d // o._d), d)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self._n], self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return Poly._raw(K.sub(self._n, o._n), self._d)
        d = _lcm(self._d, o._d)
        return Poly._raw(K.lincomb(self._n, d // self._d, o._n, -(d // o._d)), d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly._raw(K.mul(self._n, other._n), self._d * other._d)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly._raw(K.scale(self._n, c.numerator), self._d * c.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __divmod__(self, other: "Poly") -> tuple:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        q, r, k = K.pdivrem(self._n, o._n)
        # lc(b)^k * a_int = q*b_int + r  =>  a = q*db/(lc^k*da) * b + r/(lc^k*da)
        lck = o._n[-1] ** k
        s = lck * self._d
        if s < 0:
            q = [-c for c in q]
            r = [-c for c in r]
            s = -s
        return Poly._raw(K.scale(q, o._d), s), Poly._raw(r, s)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient, raising ``ArithmeticError`` if the division leaves a remainder."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def diff(self, k: int = 1) -> "Poly":
        n = self._n
        for _ in range(k):
            n = K.diff(n)
        return Poly._raw(n, self._d)

    def primitive(self) -> tuple:
        """Return (c, p) with self == c*p, p primitive in Z[x] with positive lc."""
        if not self._n:
            return Fraction(0), self
        g = K.content(self._n)
        if self._n[-1] < 0:
            g = -g
        return Fraction(g, self._d), Poly._raw([c // g for c in self._n], 1)

    def monic(self) -> "Poly":
        if not self._n:
            return self
        return self * (1 / self.lc)

    def compose(self, other: "Poly") -> "Poly":
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    def scale_x(self, c) -> "Poly":
        """Return p(c*x)."""
        c = Fraction(c)
        return Poly(a * c**i for i, a in enumerate(self.coeffs))

    # -- evaluation -------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            acc = 0
            for c in reversed(self._n):
                acc = acc * x + c
            return Fraction(acc, self._d)
        return self.eval_float(x)

    def eval_float(self, x):
        """Horner evaluation in floating point (scalars or numpy arrays)."""
        cs = [c / self._d for c in self._n]
        if not cs:
            return np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
        return np.polyval(cs[::-1], x)

    # -- display ----------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"


def format_poly(p: Poly, var: str = "x") -> str:
    """Render like ``4x^4+12x^2+3``."""
    if not p:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and a == 1:
            body = mono
        elif a.denominator == 1:
            body = f"{a.numerator}{mono}"
        else:
            body = f"({a}){mono}" if mono else f"{a}"
        parts.append((sign, body))
    s = "".join(sg + b for sg, b in parts)
    return s[1:] if s.startswith("+") else s


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (primitive remainder sequence)."""
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    _, u = a.primitive()
    _, v = b.primitive()
    un, vn = list(u._n), list(v._n)
    if len(un) < len(vn):
        un, vn = vn, un
    while vn:
        _, r, _ = K.pdivrem(un, vn)
        if r:
            g = K.content(r)
            r = [c // g for c in r]
        un, vn = vn, r
    return Poly._raw(un, 1).monic()


def squarefree_part(p: Poly) -> Poly:
    if p.degree < 1:
        return p
    return p.exact_div(poly_gcd(p, p.diff()))


def squarefree_decomposition(p: Poly) -> list:
    """Yun's algorithm: list of (factor, multiplicity) with monic squarefree factors."""
    if p.degree < 1:
        return []
    out = []
    f = p.monic()
    d = f.diff()
    a = poly_gcd(f, d)
    b = f.exact_div(a)
    c = d.exact_div(a)
    e = c - b.diff()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, e)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = e.exact_div(a)
        e = c - b.diff()
        i += 1
    return out

