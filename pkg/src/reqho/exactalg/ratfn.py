"""Rational functions over Q with factored, canonical denominators.

The denominator is kept as a product of irreducible primitive integer
polynomials with positive leading coefficients.  Knowing the irreducible
factors makes canonical reduction a matter of trial division, which avoids
polynomial gcds in the inner loops of operator algebra.  Irreducible
factorisation itself is delegated to sympy, once per new denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from ._kernels import K
from .poly import Poly, format_poly

_ONE = Poly.const(1)


@lru_cache(maxsize=None)
def _factor_primitive(p: Poly) -> tuple:
    """Irreducible factorisation of a primitive integer polynomial of degree >= 1."""
    import sympy

    x = sympy.Symbol("x")
    sp = sympy.Poly(list(reversed(p.int_coeffs)), x, domain="ZZ")
    c, facs = sp.factor_list()
    out = []
    sign = int(c)
    for f, e in facs:
        ints = [int(a) for a in reversed(f.all_coeffs())]
        if ints[-1] < 0:
            ints = [-a for a in ints]
            sign *= (-1) ** e
        out.append((Poly._raw(ints), int(e)))
    out.sort(key=lambda fe: fe[0].sort_key())
    return Fraction(sign), tuple(out)


def factor(p: Poly) -> tuple:
    """Return (c, ((f1, e1), ...)) with p == c * prod fi**ei, fi irreducible primitive."""
    if not p:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    c, prim = p.primitive()
    if prim.degree < 1:
        return c * prim.lc, ()
    s, facs = _factor_primitive(prim)
    return c * s, facs


@lru_cache(maxsize=4096)
def _fpow(f: Poly, e: int) -> Poly:
    if e == 0:
        return _ONE
    if e == 1:
        return f
    h = _fpow(f, e // 2)
    h = h * h
    return h * f if e & 1 else h


def _divexact(num: Poly, f: Poly):
    q = K.divexact(num._n, f._n)
    if q is None:
        return None
    return Poly._raw(q, num.den)


def _merge_max(a: dict, b: dict) -> dict:
    out = dict(a)
    for f, e in b.items():
        if out.get(f, 0) < e:
            out[f] = e
    return out


class RationalFn:
    """Immutable rational function ``num / prod(f**e)`` in lowest terms."""

    __slots__ = ("_num", "_fac", "_hash")

    def __init__(self, num=0, den=None):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            self._num, self._fac, self._hash = num, (), None
            return
        if not isinstance(den, Poly):
            den = Poly.const(den)
        c, facs = factor(den)
        r = RationalFn._make(num * (1 / c), dict(facs))
        self._num, self._fac, self._hash = r._num, r._fac, None

    @classmethod
    def _build(cls, num: Poly, fac: tuple) -> "RationalFn":
        r = object.__new__(cls)
        r._num, r._fac, r._hash = num, fac, None
        return r

    @classmethod
    def _make(cls, num: Poly, exps: dict) -> "RationalFn":
        """Reduce num / prod f**e by trial division and build the canonical form."""
        if not num:
            return cls._build(num, ())
        out = []
        for f, e in exps.items():
            while e > 0:
                q = _divexact(num, f)
                if q is None:
                    break
                num = q
                e -= 1
            if e > 0:
                out.append((f, e))
        out.sort(key=lambda fe: fe[0].sort_key())
        return cls._build(num, tuple(out))

    @classmethod
    def from_factored(cls, num: Poly, factors: Iterable) -> "RationalFn":
        """Build from a numerator and (irreducible primitive factor, exponent) pairs."""
        exps: dict = {}
        for f, e in factors:
            exps[f] = exps.get(f, 0) + e
        return cls._make(num, exps)

    @classmethod
    def x(cls) -> "RationalFn":
        return cls(Poly.x())

    # -- inspection -------------------------------------------------------
    @property
    def num(self) -> Poly:
        return self._num

    @property
    def den(self) -> Poly:
        d = _ONE
        for f, e in self._fac:
            d = d * _fpow(f, e)
        return d

    @property
    def den_factors(self) -> tuple:
        return self._fac

    def is_poly(self) -> bool:
        return not self._fac

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self) -> bool:
        return bool(self._num)

    def is_const(self) -> bool:
        return not self._fac and self._num.is_const()

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant")
        return self._num.coeff(0)

    def to_poly(self) -> Poly:
        if self._fac:
            raise ValueError("rational function is not a polynomial")
        return self._num

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFn):
            return self._fac == other._fac and self._num == other._num
        if isinstance(other, (int, Fraction, Poly)):
            return self == RationalFn(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._fac))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(o):
        if isinstance(o, RationalFn):
            return o
        if isinstance(o, (int, Fraction)):
            return RationalFn._build(Poly.const(o), ())
        if isinstance(o, Poly):
            return RationalFn._build(o, ())
        return None

    @staticmethod
    def sum(items: Iterable["RationalFn"]) -> "RationalFn":
        """Sum over a common denominator with a single reduction."""
        items = [it for it in items if it._num]
        if not items:
            return RationalFn()
        if len(items) == 1:
            return items[0]
        exps: dict = {}
        for it in items:
            exps = _merge_max(exps, dict(it._fac))
        if not exps:
            tot = items[0]._num
            for it in items[1:]:
                tot = tot + it._num
            return RationalFn._build(tot, ())
        tot = Poly()
        for it in items:
            own = dict(it._fac)
            m = it._num
            for f, e in exps.items():
                k = e - own.get(f, 0)
                if k:
                    m = m * _fpow(f, k)
            tot = tot + m
        return RationalFn._make(tot, exps)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._fac and not o._fac:
            return RationalFn._build(self._num + o._num, ())
        return RationalFn.sum([self, o])

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn._build(-self._num, self._fac)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RationalFn()
            return RationalFn._build(self._num * other, self._fac)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._num or not o._num:
            return RationalFn()
        if not self._fac and not o._fac:
            return RationalFn._build(self._num * o._num, ())
        exps = dict(self._fac)
        for f, e in o._fac:
            exps[f] = exps.get(f, 0) + e
        return RationalFn._make(self._num * o._num, exps)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if not self._num:
            raise ZeroDivisionError("inverse of zero rational function")
        c, facs = factor(self._num)
        return RationalFn._make(self.den * (1 / c), dict(facs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "RationalFn":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFn._build(self._num**k, tuple((f, e * k) for f, e in self._fac))

    def diff(self) -> "RationalFn":
        """Derivative; the result is already in lowest terms."""
        p = self._num
        if not self._fac:
            return RationalFn._build(p.diff(), ())
        fs = [f for f, _ in self._fac]
        # (p' S - p * sum e_i f_i' S/f_i) / prod f_i^(e_i+1), S = prod f_i
        s = _ONE
        for f in fs:
            s = s * f
        acc = p.diff() * s
        for f, e in self._fac:
            others = _ONE
            for g in fs:
                if g is not f:
                    others = others * g
            acc = acc - p * (f.diff() * others * e)
        return RationalFn._build(acc, tuple((f, e + 1) for f, e in self._fac))

    # -- evaluation -------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            d = self.den(x)
            if not d:
                raise ZeroDivisionError(f"pole at x={x}")
            return self._num(x) / d
        return self.eval_float(x)

    def eval_float(self, x):
        """Floating-point evaluation as polynomial part plus proper fraction."""
        q, r, d = self.proper_parts()
        out = q.eval_float(x)
        if r:
            out = out + r.eval_float(x) / d.eval_float(x)
        return out

    def proper_parts(self) -> tuple:
        """Return (q, r, d) with self == q + r/d and deg r < deg d."""
        if not self._fac:
            return self._num, Poly(), _ONE
        d = self.den
        q, r = divmod(self._num, d)
        return q, r, d

    def numeric_poles(self) -> np.ndarray:
        """Real roots of the denominator, numerically (empty if none)."""
        if not self._fac:
            return np.empty(0)
        rts = np.roots([float(c) for c in reversed(self.den.coeffs)])
        return np.sort(rts[np.abs(rts.imag) < 1e-9].real)

    def __str__(self) -> str:
        return format_ratfn(self)

    def __repr__(self) -> str:
        return f"RationalFn({format_ratfn(self)})"


def _fmt_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"({c})"


def format_ratfn(r: RationalFn) -> str:
    """Render as polynomial part plus a content-factored proper fraction.

    Example: ``x^2+3+8(2x^2-1)/(2x^2+1)^2``.
    """
    q, rem, _ = r.proper_parts()
    head = format_poly(q) if q else ""
    if not rem:
        return head or "0"
    c, prim = rem.primitive()
    k = 0
    while not prim.coeff(k):
        k += 1
    core = Poly(prim.coeffs[k:])
    sign = "-" if c < 0 else "+"
    c = abs(c)
    xpow = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
    core_s = format_poly(core)
    if core.degree >= 1 and (c != 1 or xpow):
        core_s = f"({core_s})"
    elif core.degree < 1:
        core_s = "" if (xpow or c != 1) else "1"
    cs = "" if (c == 1 and (xpow or core_s)) else _fmt_scalar(c)
    numer = f"{cs}{xpow}{core_s}"
    if core.degree >= 1 and c == 1 and not xpow:
        numer = core_s if core_s.startswith("(") else f"({core_s})"
    exps = {e for _, e in r.den_factors}
    if len(exps) == 1:
        (e,) = exps
        base = _ONE
        for f, _ in r.den_factors:
            base = base * f
        bs = format_poly(base)
        single = sum(1 for a in base.int_coeffs if a) == 1 and base.lc == 1
        den = bs if (single and e == 1) else f"({bs})"
        if e != 1:
            den += f"^{e}"
    else:
        den = "".join(f"({format_poly(f)})" + (f"^{e}" if e != 1 else "") for f, e in r.den_factors)
    frac = f"{numer}/{den}"
    if not head:
        return frac if sign == "+" else "-" + frac
    return f"{head}{sign}{frac}"


def sum_of_products(terms: Iterable) -> RationalFn:
    """Exact sum of c*a*b over (c, a, b) triples with a single final reduction."""
    pend = []
    exps: dict = {}
    for c, a, b in terms:
        if not c or not a._num or not b._num:
            continue
        e = dict(a._fac)
        for f, k in b._fac:
            e[f] = e.get(f, 0) + k
        pend.append((a._num * b._num * c if c != 1 else a._num * b._num, e))
        exps = _merge_max(exps, e)
    if not pend:
        return RationalFn()
    tot = Poly()
    for m, e in pend:
        for f, k in exps.items():
            d = k - e.get(f, 0)
            if d:
                m = m * _fpow(f, d)
        tot = tot + m
    return RationalFn._make(tot, exps)


def common_denominator(items: Iterable[RationalFn]) -> RationalFn:
    """Least common denominator (as a polynomial RationalFn) of the given functions."""
    exps: dict = {}
    for it in items:
        exps = _merge_max(exps, dict(it._fac))
    d = _ONE
    for f, e in exps.items():
        d = d * _fpow(f, e)
    return RationalFn._build(d, ())
