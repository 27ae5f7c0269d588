"""Harmonic oscillator: Hamiltonian, ladder operators and seed states."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diffop import DiffOp
from .exactalg import Poly, QuasiPoly

PHYS = "phys"
NONPHYS = "nonphys"


@lru_cache(maxsize=None)
def hermite(n: int) -> Poly:
    """Physicists' Hermite polynomial H_n."""
    if n < 0:
        raise ValueError("Hermite index must be non-negative")
    a, b = Poly.const(1), Poly([0, 2])
    if n == 0:
        return a
    two_x = Poly([0, 2])
    for k in range(1, n):
        a, b = b, two_x * b - a * (2 * k)
    return b


@lru_cache(maxsize=None)
def hermite_imag(n: int) -> Poly:
    """Positive-leading multiple of H_n(ix): h_{n+1} = 2x h_n + 2n h_{n-1}."""
    if n < 0:
        raise ValueError("Hermite index must be non-negative")
    a, b = Poly.const(1), Poly([0, 2])
    if n == 0:
        return a
    two_x = Poly([0, 2])
    for k in range(1, n):
        a, b = b, two_x * b + a * (2 * k)
    return b


@dataclass(frozen=True)
class SeedState:
    """Formal eigenfunction of H_osc = -D^2 + x^2 used as a seed."""

    kind: str
    index: int
    state: QuasiPoly
    eigenvalue: Fraction

    @property
    def name(self) -> str:
        return f"psi_{self.index}" if self.kind == PHYS else f"psi-_{self.index}"

    @property
    def is_physical(self) -> bool:
        return self.kind == PHYS


@lru_cache(maxsize=None)
def physical(n: int) -> SeedState:
    """psi_n = H_n(x) exp(-x^2/2), eigenvalue 2n+1."""
    return SeedState(PHYS, n, QuasiPoly(hermite(n), Fraction(-1)), Fraction(2 * n + 1))


@lru_cache(maxsize=None)
def nonphysical(n: int) -> SeedState:
    """psi^-_n = psi_n(ix), eigenvalue -(2n+1), normalised to a positive leading coefficient."""
    return SeedState(NONPHYS, n, QuasiPoly(hermite_imag(n), Fraction(1)), Fraction(-(2 * n + 1)))


def seed(kind: str, n: int) -> SeedState:
    if kind == PHYS:
        return physical(n)
    if kind == NONPHYS:
        return nonphysical(n)
    raise ValueError(f"unknown seed kind {kind!r}")


def qho_hamiltonian(shift=0) -> DiffOp:
    """-D^2 + x^2 + shift."""
    return DiffOp([Poly([Fraction(shift), 0, 1]), 0, -1])


def ladder(sign: int) -> DiffOp:
    """a^- = D + x (sign=-1) and a^+ = -D + x (sign=+1)."""
    if sign < 0:
        return DiffOp([Poly.x(), 1])
    if sign > 0:
        return DiffOp([Poly.x(), -1])
    raise ValueError("sign must be +1 or -1")


hermite_physical = physical
hermite_nonphysical = nonphysical


def ladder_a(direction: str) -> DiffOp:
    """``ladder_a("-")`` is a^-, ``ladder_a("+")`` is a^+."""
    return ladder(-1 if direction in ("-", "lowering", "minus") else 1)
