"""Darboux-Crum-Krein-Adler construction of rationally extended oscillators.

Wronskians are computed as polynomial determinants with the Gaussian
factors pulled out of each column; intertwiners come from cofactor expansion
of ``W(psi_1, ..., psi_n, f)`` along its last column, so singular
intermediate Darboux steps are never formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Sequence

from .diffop import DiffOp, adjoint, compose
from .exactalg import Poly, QuasiPoly, QuasiRational, RationalFn, count_real_roots
from .oscillator import qho_hamiltonian
from .scheme import Scheme, SchemeError, lowest_level, maya_nodeless, present_levels

__all__ = [
    "Admissibility",
    "ExtendedSystem",
    "check_admissible",
    "Inadmissible",
    "build_intertwiner",
    "build_potential",
    "build_system",
    "chain_intertwiner",
    "cofactor_minors",
    "eigenstates",
    "potential_from_intertwiner",
    "product_polynomial_check",
    "raw_wronskian",
    "wronskian",
]


class Inadmissible(SchemeError):
    """The scheme's Wronskian has real zeros."""


@dataclass(frozen=True)
class Admissibility:
    """Outcome of the nodelessness test; ``root_count`` is the witness."""

    admissible: bool
    root_count: int
    screen: bool
    defects: tuple = ()

    def __bool__(self) -> bool:
        return self.admissible


def check_admissible(scheme: Scheme) -> Admissibility:
    """Sturm count of real zeros of the Wronskian's polynomial part.

    The level-gap parity screen runs alongside; disagreement is reported as a
    defect, the Sturm count decides.
    """
    if scheme.size == 0:
        raise SchemeError("empty scheme")
    screen = maya_nodeless(scheme)
    n = count_real_roots(wronskian(_states(scheme)).poly)
    defects = ()
    if screen != (n == 0):
        defects = (f"gap-parity screen says {'nodeless' if screen else 'nodes'}, Sturm count is {n}",)
    return Admissibility(n == 0, n, screen, defects)


def _derivative_table(states: Sequence[QuasiPoly], rows: int) -> list:
    """table[i][j] = polynomial part of the i-th derivative of states[j]."""
    cols = []
    for st in states:
        col = [st]
        for _ in range(rows - 1):
            col.append(col[-1].diff())
        cols.append([c.poly for c in col])
    return [[cols[j][i] for j in range(len(states))] for i in range(rows)]


class _Det:
    """Memoised Laplace expansion along the first remaining column."""

    def __init__(self, table: list):
        self.t = table
        self.memo: dict = {}

    def __call__(self, rows: tuple, col0: int = 0) -> Poly:
        if not rows:
            return Poly.const(1)
        key = (rows, col0)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        acc = Poly()
        for pos, r in enumerate(rows):
            e = self.t[r][col0]
            if not e:
                continue
            sub = self(rows[:pos] + rows[pos + 1:], col0 + 1)
            term = e * sub
            acc = acc - term if pos % 2 else acc + term
        self.memo[key] = acc
        return acc


def raw_wronskian(states: Sequence[QuasiPoly]) -> QuasiPoly:
    """Exact Wronskian of the given quasi-polynomials, in the given order."""
    n = len(states)
    if n == 0:
        return QuasiPoly(Poly.const(1), Fraction(0))
    det = _Det(_derivative_table(states, n))
    return QuasiPoly(det(tuple(range(n))), sum((s.gexp for s in states), Fraction(0)))


def wronskian(states: Sequence[QuasiPoly]) -> QuasiPoly:
    """Wronskian canonicalised to a positive leading coefficient.

    The sign dropped by canonicalisation is ``sign(raw_wronskian(states).poly.lc)``.
    """
    w = raw_wronskian(states)
    return QuasiPoly(-w.poly, w.gexp) if w.poly.lc < 0 else w


def cofactor_minors(states: Sequence[QuasiPoly]) -> list:
    """Polynomial parts M_0..M_n of the minors of W(states, f) along its last column.

    M_k is the determinant with derivative row k removed; M_n is the Wronskian.
    """
    n = len(states)
    det = _Det(_derivative_table(states, n + 1))
    allrows = tuple(range(n + 1))
    return [det(allrows[:k] + allrows[k + 1:]) for k in range(n + 1)]


def build_intertwiner(scheme: Scheme | Sequence[QuasiPoly]) -> DiffOp:
    """Monic intertwiner A f = W(psi_1..psi_n, f) / W(psi_1..psi_n)."""
    states = _states(scheme)
    n = len(states)
    if n == 0:
        return DiffOp.identity()
    minors = cofactor_minors(states)
    w = minors[n]
    if not w:
        raise SchemeError("seed functions are linearly dependent")
    coeffs = []
    for k in range(n + 1):
        sgn = -1 if (k + n) % 2 else 1
        coeffs.append(RationalFn(minors[k] * sgn, w) if minors[k] else RationalFn())
    return DiffOp(coeffs)


def chain_intertwiner(scheme: Scheme | Sequence[QuasiPoly]) -> DiffOp:
    """Iterated first-order Darboux steps A_m = D - (log phi_m)'.

    phi_m is the image of the m-th seed under the previous steps. Exact even when
    intermediate potentials are singular; used as a cross-check.
    """
    states = _states(scheme)
    op = DiffOp.identity()
    for st in states:
        phi = op.apply(st.as_rational())
        if phi.is_zero():
            raise SchemeError("seed functions are linearly dependent")
        logd = phi.rat.diff() / phi.rat + RationalFn(Poly.monomial(1, phi.gexp))
        step = DiffOp([-logd, 1])
        op = compose(step, op)
    return op


def _states(scheme) -> list:
    if isinstance(scheme, Scheme):
        return [s.state for s in scheme.states]
    return list(scheme)


def log_derivative_term(w: QuasiPoly) -> RationalFn:
    """(log W)'' for W = w * exp(S x^2/2)."""
    lw = RationalFn(w.poly.diff(), w.poly)
    return lw.diff() + w.gexp


def gauge_shift(scheme: Scheme) -> Fraction:
    """Constant c making the lowest level of the extended system 0."""
    return Fraction(-(2 * lowest_level(scheme) + 1))


def build_potential(scheme: Scheme, shift=None) -> RationalFn:
    """V = x^2 + c - 2 (log W)''; the default c is the canonical gauge."""
    c = gauge_shift(scheme) if shift is None else Fraction(shift)
    w = wronskian(_states(scheme))
    return RationalFn(Poly([c, 0, 1])) - log_derivative_term(w) * 2


def potential_from_intertwiner(a: DiffOp, source: RationalFn) -> RationalFn:
    """Partner potential read off the monic intertwiner: V + 2 c_{n-1}'."""
    n = a.order
    if n < 1:
        return source
    return source + a.coeff(n - 1).diff() * 2


@dataclass
class ExtendedSystem:
    """A rationally extended oscillator and its intertwiners."""

    scheme: Scheme
    wronskian: QuasiPoly
    potential: RationalFn
    shift: Fraction
    intertwiner_down: DiffOp
    _up: DiffOp | None = field(default=None, repr=False)

    @property
    def base_shift(self) -> Fraction:
        return self.shift

    @cached_property
    def delta(self) -> Fraction:
        """Delta = n_+ + 2 n_-; the equidistant part starts at 2*Delta."""
        from .spectral import predict_spectrum

        return predict_spectrum(self.scheme).delta

    @property
    def hamiltonian(self) -> DiffOp:
        """-D^2 + V in the canonical gauge."""
        return DiffOp([self.potential, 0, -1])

    @property
    def source_hamiltonian(self) -> DiffOp:
        """H_osc + shift, so that A H_source = H A."""
        return qho_hamiltonian(self.shift)

    @property
    def intertwiner_up(self) -> DiffOp:
        if self._up is None:
            self._up = adjoint(self.intertwiner_down)
        return self._up

    @property
    def order(self) -> int:
        return self.scheme.size

    def down(self, f) -> QuasiRational:
        return self.intertwiner_down.apply(f)

    def up(self, f) -> QuasiRational:
        return self.intertwiner_up.apply(f)


def build_system(scheme: Scheme, check_nodes: bool = True) -> ExtendedSystem:
    """Exact potential and intertwiners; raises :class:`Inadmissible` on nodes."""
    states = _states(scheme)
    w = wronskian(states)
    if check_nodes and count_real_roots(w.poly) > 0:
        raise Inadmissible(f"Wronskian of {scheme.label} has real zeros")
    c = gauge_shift(scheme)
    v = RationalFn(Poly([c, 0, 1])) - log_derivative_term(w) * 2
    a = build_intertwiner(states)
    return ExtendedSystem(scheme, w, v, c, a)


def product_polynomial_check(system: ExtendedSystem | Scheme) -> list:
    """Verify A^+ A^- = prod (H_source - E_k) exactly; return the roots E_k.

    E_k are the seed eigenvalues measured against the source Hamiltonian.
    """
    from .ladder import match_hpoly

    if isinstance(system, Scheme):
        system = build_system(system)
    prod = compose(system.intertwiner_up, system.intertwiner_down)
    hp = match_hpoly(prod, system.source_hamiltonian)
    expect = sorted(s.eigenvalue + system.shift for s in system.scheme.states)
    got = sorted(r for r, m in hp.roots for _ in range(m))
    if got != expect or hp.lead != 1:
        raise ArithmeticError(f"product polynomial mismatch: {got} vs {expect}")
    return got


def eigenstates(system: ExtendedSystem, count: int) -> list:
    """Lowest ``count`` eigenstates as (energy, QuasiRational), ground-zero gauge.

    Kept oscillator levels m give A psi_m; the level -j-1 added by a seed
    psi^-_j gives W(other seeds) / W(all seeds).
    """
    scheme = system.scheme
    levels = present_levels(scheme, count + scheme.size + 1)[:count]
    out = []
    for m in levels:
        if m >= 0:
            from .oscillator import physical

            st = system.down(physical(m).state)
        else:
            others = [s.state for s in scheme.states if not (s.kind == "nonphys" and s.index == -m - 1)]
            w = raw_wronskian(others)
            st = QuasiRational(RationalFn(w.poly, system.wronskian.poly), w.gexp - system.wronskian.gexp)
        out.append((Fraction(2 * m + 1) + system.shift, st))
    return out
