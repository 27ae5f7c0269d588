"""Quasi-polynomial and quasi-rational functions ``r(x) * exp(s*x**2/2)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .poly import Poly
from .ratfn import RationalFn


def _gauss(s: Fraction, x):
    return np.exp(float(s) * np.asarray(x, dtype=float) ** 2 / 2)


@dataclass(frozen=True)
class QuasiPoly:
    """``poly(x) * exp(gexp * x**2 / 2)``."""

    poly: Poly
    gexp: Fraction

    def __post_init__(self):
        # the zero state carries no Gaussian factor
        object.__setattr__(self, "gexp", Fraction(self.gexp) if self.poly else Fraction(0))

    def diff(self) -> "QuasiPoly":
        return QuasiPoly(self.poly.diff() + self.poly * Poly.monomial(1, self.gexp), self.gexp)

    def __mul__(self, other):
        if isinstance(other, QuasiPoly):
            return QuasiPoly(self.poly * other.poly, self.gexp + other.gexp)
        if isinstance(other, (int, Fraction, Poly)):
            return QuasiPoly(self.poly * other, self.gexp)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "QuasiPoly":
        return QuasiPoly(-self.poly, self.gexp)

    def __add__(self, other: "QuasiPoly") -> "QuasiPoly":
        if not other.poly:
            return self
        if not self.poly:
            return other
        if other.gexp != self.gexp:
            raise ValueError("cannot add quasi-polynomials with different Gaussian factors")
        return QuasiPoly(self.poly + other.poly, self.gexp)

    def __sub__(self, other: "QuasiPoly") -> "QuasiPoly":
        return self + (-other)

    def as_rational(self) -> "QuasiRational":
        return QuasiRational(RationalFn(self.poly), self.gexp)

    def is_zero(self) -> bool:
        return not self.poly

    def __call__(self, x):
        return self.poly.eval_float(x) * _gauss(self.gexp, x)

    def __str__(self) -> str:
        return f"({self.poly})*exp({self.gexp}*x^2/2)"


@dataclass(frozen=True)
class QuasiRational:
    """``rat(x) * exp(gexp * x**2 / 2)`` with ``rat`` a rational function."""

    rat: RationalFn
    gexp: Fraction

    def __post_init__(self):
        r = self.rat
        if isinstance(r, Poly) or isinstance(r, (int, Fraction)):
            object.__setattr__(self, "rat", RationalFn(r))
        object.__setattr__(self, "gexp", Fraction(self.gexp) if self.rat else Fraction(0))

    @classmethod
    def from_quasi(cls, q: "QuasiPoly | QuasiRational") -> "QuasiRational":
        return q.as_rational() if isinstance(q, QuasiPoly) else q

    def diff(self) -> "QuasiRational":
        return QuasiRational(self.rat.diff() + self.rat * RationalFn(Poly.monomial(1, self.gexp)), self.gexp)

    def __mul__(self, other):
        if isinstance(other, QuasiRational):
            return QuasiRational(self.rat * other.rat, self.gexp + other.gexp)
        if isinstance(other, QuasiPoly):
            return self * other.as_rational()
        if isinstance(other, (int, Fraction, RationalFn, Poly)):
            return QuasiRational(self.rat * other, self.gexp)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "QuasiRational":
        return QuasiRational(-self.rat, self.gexp)

    def __add__(self, other: "QuasiRational") -> "QuasiRational":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.gexp != self.gexp:
            raise ValueError("cannot add quasi-rational functions with different Gaussian factors")
        return QuasiRational(self.rat + other.rat, self.gexp)

    def __sub__(self, other: "QuasiRational") -> "QuasiRational":
        return self + (-other)

    def reciprocal(self) -> "QuasiRational":
        return QuasiRational(self.rat.inverse(), -self.gexp)

    def is_zero(self) -> bool:
        return not self.rat

    def ratio_to(self, other: "QuasiRational"):
        """Constant c with self == c*other, or None if they are not proportional."""
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        if self.is_zero():
            return Fraction(0)
        if self.gexp != other.gexp:
            return None
        q = self.rat / other.rat
        return q.const_value() if q.is_const() else None

    def is_normalizable(self) -> bool:
        """Square integrable on the real line (assumes no real poles)."""
        if self.gexp < 0:
            return True
        if self.gexp > 0:
            return False
        return self.rat.num.degree < self.rat.den.degree

    def __call__(self, x):
        return self.rat.eval_float(x) * _gauss(self.gexp, x)

    def __str__(self) -> str:
        return f"({self.rat})*exp({self.gexp}*x^2/2)"
