"""Linear differential operators with rational-function coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .exactalg import Poly, QuasiPoly, QuasiRational, RationalFn
from .exactalg.ratfn import sum_of_products


def _as_ratfn(c) -> RationalFn:
    if isinstance(c, RationalFn):
        return c
    return RationalFn(c)


def _derivatives(c: RationalFn, n: int) -> list:
    out = [c]
    for _ in range(n):
        out.append(out[-1].diff() if out[-1] else out[-1])
    return out


class DiffOp:
    """``sum_k coeffs[k] * D**k`` with ``D = d/dx``.

    Coefficients are exact rational functions; trailing zero coefficients
    are dropped so ``order`` is the true order (``-1`` for the zero operator).
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_ratfn(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def D(cls, k: int = 1) -> "DiffOp":
        return cls([0] * k + [1])

    @classmethod
    def mult(cls, f) -> "DiffOp":
        return cls([f])

    @classmethod
    def identity(cls) -> "DiffOp":
        return cls([1])

    @classmethod
    def x(cls) -> "DiffOp":
        return cls([Poly.x()])

    # -- inspection -------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> RationalFn:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else RationalFn()

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_multiplication(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, DiffOp):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # -- algebra ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, DiffOp):
            if isinstance(other, (int, Fraction, Poly, RationalFn)):
                other = DiffOp.mult(other)
            else:
                return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "DiffOp":
        return DiffOp(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            if isinstance(other, (int, Fraction, Poly, RationalFn)):
                other = DiffOp.mult(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Composition ``self o other`` (or scaling by a constant/function)."""
        if isinstance(other, DiffOp):
            return compose(self, other)
        if isinstance(other, (int, Fraction)):
            return DiffOp(c * other for c in self.coeffs)
        if isinstance(other, (Poly, RationalFn)):
            return compose(self, DiffOp.mult(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DiffOp(c * other for c in self.coeffs)
        if isinstance(other, (Poly, RationalFn)):
            f = _as_ratfn(other)
            return DiffOp(f * c for c in self.coeffs)
        return NotImplemented

    def __pow__(self, n: int) -> "DiffOp":
        out = DiffOp.identity()
        for _ in range(n):
            out = out * self
        return out

    def adjoint(self) -> "DiffOp":
        return adjoint(self)

    def apply(self, f):
        return apply(self, f)

    def __call__(self, f):
        return apply(self, f)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.order, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            d = "" if k == 0 else ("D" if k == 1 else f"D^{k}")
            if c == 1 and d:
                parts.append(d)
            else:
                parts.append(f"[{c}]{d}")
        return " + ".join(parts)

    __repr__ = __str__


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """Leibniz composition: (a_i D^i) o (b_j D^j) = a_i sum_k C(i,k) b_j^(k) D^(i+j-k)."""
    if a.is_zero() or b.is_zero():
        return DiffOp()
    if b.is_multiplication() and a.is_multiplication():
        return DiffOp([a.coeffs[0] * b.coeffs[0]])
    na = a.order
    ders = [_derivatives(bj, na) for bj in b.coeffs]
    buckets: dict = {}
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j, dj in enumerate(ders):
            for k in range(i + 1):
                bjk = dj[k]
                if bjk:
                    buckets.setdefault(i + j - k, []).append((comb(i, k), ai, bjk))
    top = na + b.order
    return DiffOp(sum_of_products(buckets.get(m, ())) for m in range(top + 1))


def adjoint(a: DiffOp) -> DiffOp:
    """Formal adjoint ``sum_k (-D)^k o c_k``."""
    if a.is_zero():
        return a
    n = a.order
    ders = [_derivatives(c, n) for c in a.coeffs]
    one = RationalFn(1)
    out = []
    for j in range(n + 1):
        terms = []
        for k in range(j, n + 1):
            c = ders[k][k - j]
            if c:
                terms.append(((-1) ** k * comb(k, j), c, one))
        out.append(sum_of_products(terms))
    return DiffOp(out)


def apply(a: DiffOp, f):
    """Apply to a QuasiRational / QuasiPoly (or a RationalFn / Poly) exactly."""
    if isinstance(f, QuasiPoly):
        f = f.as_rational()
    if isinstance(f, QuasiRational):
        ders = [f]
        for _ in range(a.order):
            ders.append(ders[-1].diff())
        r = sum_of_products((1, c, d.rat) for c, d in zip(a.coeffs, ders) if c)
        return QuasiRational(r if r else RationalFn(), f.gexp)
    f = _as_ratfn(f)
    ders = _derivatives(f, a.order)
    return sum_of_products((1, c, d) for c, d in zip(a.coeffs, ders))


def chain(factors: Sequence[DiffOp]) -> DiffOp:
    """Compose ``factors[0] o factors[1] o ...``."""
    out = DiffOp.identity()
    for f in factors:
        out = out * f
    return out


def apply_chain(factors: Sequence[DiffOp], f):
    """Apply ``factors[0] o ... o factors[-1]`` to f, rightmost first."""
    for op in reversed(factors):
        f = apply(op, f)
    return f
