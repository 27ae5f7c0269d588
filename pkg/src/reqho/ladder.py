"""Ladder operators of rationally extended oscillators and their identities.

The trinity (A, B, C) is assembled from the intertwiners of the
complementary minimal alpha and beta schemes. Every identity is checked by
exact comparison of canonical differential operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Sequence

from .dckat import ExtendedSystem, build_system
from .diffop import DiffOp, apply_chain, chain, compose
from .exactalg import Poly, QuasiRational, RationalFn
from .exactalg.ratfn import factor
from .oscillator import ladder, qho_hamiltonian
from .scheme import Scheme, SchemeError
from .spectral import SpectrumModel, complementary_scheme, minimal_pair, predict_spectrum

LOWERING = "lowering"
RAISING = "raising"


class NotCentral(ArithmeticError):
    """A composition that should be a polynomial in the Hamiltonian is not."""


# -- polynomials in the Hamiltonian ----------------------------------------


def _fmt_factor(r: Fraction, var: str) -> str:
    if r == 0:
        return var
    sign = "-" if r > 0 else "+"
    return f"({var}{sign}{abs(r)})"


@dataclass(frozen=True)
class HPolynomial:
    """lead * prod (t - r)^m * residual(t), with ``residual`` free of rational roots."""

    roots: tuple
    lead: Fraction = Fraction(1)
    residual: Poly = Poly.const(1)

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1) -> "HPolynomial":
        cnt: dict = {}
        for r in roots:
            r = Fraction(r)
            cnt[r] = cnt.get(r, 0) + 1
        return cls(tuple(sorted(cnt.items())), Fraction(lead))

    @classmethod
    def from_poly(cls, p: Poly) -> "HPolynomial":
        if not p:
            raise ValueError("zero polynomial")
        c, facs = factor(p)
        roots = []
        res = Poly.const(1)
        for f, e in facs:
            if f.degree == 1:
                a0, a1 = f.coeffs
                roots.append((-a0 / a1, e))
                c *= a1**e
            else:
                lc = f.lc
                res = res * (f.monic() ** e)
                c *= lc**e
        return cls(tuple(sorted(roots)), Fraction(c), res)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots) + self.residual.degree

    def root_list(self) -> list:
        return [r for r, m in self.roots for _ in range(m)]

    def poly(self) -> Poly:
        p = Poly.const(self.lead) * self.residual
        for r, m in self.roots:
            p = p * Poly([-r, 1]) ** m
        return p

    def shift(self, c) -> "HPolynomial":
        """Polynomial q with q(t) = p(t + c)."""
        c = Fraction(c)
        res = self.residual.compose(Poly([c, 1])) if self.residual.degree > 0 else self.residual
        return HPolynomial(tuple((r - c, m) for r, m in self.roots), self.lead, res)

    def __mul__(self, other: "HPolynomial") -> "HPolynomial":
        cnt = dict(self.roots)
        for r, m in other.roots:
            cnt[r] = cnt.get(r, 0) + m
        return HPolynomial(tuple(sorted(cnt.items())), self.lead * other.lead, self.residual * other.residual)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HPolynomial):
            return NotImplemented
        return self.poly() == other.poly()

    def __hash__(self) -> int:
        return hash(self.poly())

    def render(self, var: str = "H") -> str:
        parts = []
        for r, m in sorted(self.roots, key=lambda rm: -rm[0]):
            f = _fmt_factor(r, var)
            parts.append(f + (f"^{m}" if m > 1 else ""))
        if self.residual.degree > 0:
            parts.append(f"[{self.residual}]({var})")
        body = "".join(parts) or "1"
        if self.lead == 1:
            return body
        if self.lead == -1:
            return "-" + body
        return f"{self.lead}*{body}"

    def __str__(self) -> str:
        return self.render()


class HPowers:
    """Cached powers of a second-order Hamiltonian and polynomial evaluation."""

    def __init__(self, h: DiffOp):
        self.h = h
        self._pow = [DiffOp.identity(), h]

    def power(self, j: int) -> DiffOp:
        while len(self._pow) <= j:
            self._pow.append(compose(self.h, self._pow[-1]))
        return self._pow[j]

    def op(self, p: "HPolynomial | Poly") -> DiffOp:
        if isinstance(p, HPolynomial):
            p = p.poly()
        out = DiffOp()
        for j, c in enumerate(p.coeffs):
            if c:
                out = out + self.power(j) * c
        return out


def hpoly_left(p: HPolynomial, h: DiffOp, op: DiffOp) -> DiffOp:
    """p(h) o op, one linear factor at a time."""
    if p.residual.degree > 0:
        return compose(HPowers(h).op(p.residual), hpoly_left(HPolynomial(p.roots, p.lead), h, op))
    out = op
    for r, m in p.roots:
        for _ in range(m):
            out = compose(h, out) - out * r
    return out * p.lead


def hpoly_right(op: DiffOp, p: HPolynomial, h: DiffOp) -> DiffOp:
    """op o p(h), one linear factor at a time."""
    if p.residual.degree > 0:
        return compose(hpoly_right(op, HPolynomial(p.roots, p.lead), h), HPowers(h).op(p.residual))
    out = op
    for r, m in p.roots:
        for _ in range(m):
            out = compose(out, h) - out * r
    return out * p.lead


def match_hpoly(m: DiffOp, h: DiffOp | HPowers) -> HPolynomial:
    """Express m as a polynomial in the Hamiltonian h, exactly.

    Triangular elimination from the top order; raises :class:`NotCentral`
    if a leading coefficient is not a constant or a remainder survives.
    """
    hp = h if isinstance(h, HPowers) else HPowers(h)
    if m.is_zero():
        raise NotCentral("zero operator")
    if m.order % 2:
        raise NotCentral(f"odd order {m.order}")
    d = m.order // 2
    coeffs = [Fraction(0)] * (d + 1)
    r = m
    for j in range(d, -1, -1):
        if r.order > 2 * j:
            raise NotCentral(f"remainder of order {r.order} survives at degree {j}")
        if r.order < 2 * j:
            continue
        lc = r.coeffs[-1]
        if not lc.is_const():
            raise NotCentral(f"non-constant coefficient {lc} at order {2 * j}")
        c = lc.const_value() * (-1) ** j
        coeffs[j] = c
        r = r - hp.power(j) * c
    if not r.is_zero():
        raise NotCentral(f"non-zero remainder of order {r.order}")
    return HPolynomial.from_poly(Poly(coeffs))


# -- ladder operators --------------------------------------------------------


@dataclass(eq=False)
class LadderOp:
    """A ladder operator kept as a chain of factors (leftmost applied last)."""

    name: str
    kind: str
    direction: str
    step: int
    factors: tuple

    @property
    def order(self) -> int:
        return sum(f.order for f in self.factors)

    @property
    def signed_step(self) -> int:
        return -self.step if self.direction == LOWERING else self.step

    @cached_property
    def op(self) -> DiffOp:
        return chain(self.factors)

    def apply(self, f) -> QuasiRational:
        return apply_chain(self.factors, f)

    def adjoint_factors(self) -> tuple:
        return tuple(f.adjoint() for f in reversed(self.factors))

    def __repr__(self) -> str:
        return f"LadderOp({self.name}, {self.direction}, step={self.step}, order={self.order})"


@dataclass(eq=False)
class Trinity:
    """Complementary minimal systems and the operators built from them."""

    alpha: ExtendedSystem
    beta: ExtendedSystem
    spectrum: SpectrumModel
    _cache: dict = field(default_factory=dict, repr=False)

    # invariants
    @property
    def n_plus(self) -> int:
        return self.spectrum.n_plus

    @property
    def n_minus(self) -> int:
        return self.spectrum.n_minus

    @property
    def delta(self) -> int:
        return int(self.spectrum.delta)

    @property
    def sign(self) -> int:
        return (-1) ** self.n_plus

    # basic operators
    @cached_property
    def H(self) -> DiffOp:
        return self.alpha.hamiltonian

    @cached_property
    def Hsrc(self) -> DiffOp:
        return qho_hamiltonian(2 * self.delta - 1)

    @cached_property
    def hpow(self) -> HPowers:
        return HPowers(self.H)

    @cached_property
    def hpow_src(self) -> HPowers:
        return HPowers(self.Hsrc)

    @property
    def am(self) -> DiffOp:
        return ladder(-1)

    @property
    def ap(self) -> DiffOp:
        return ladder(+1)

    @property
    def Ad(self) -> DiffOp:
        return self.alpha.intertwiner_down

    @property
    def Au(self) -> DiffOp:
        return self.alpha.intertwiner_up

    @property
    def Bd(self) -> DiffOp:
        return self.beta.intertwiner_down

    @property
    def Bu(self) -> DiffOp:
        return self.beta.intertwiner_up

    @cached_property
    def PA(self) -> HPolynomial:
        """A^- A^+ = P_A(H-breve): roots at the separated energies."""
        return HPolynomial.from_roots(self.spectrum.separated)

    @cached_property
    def PB(self) -> HPolynomial:
        """B^+ B^- = P_B(H): roots at beta-seed energies measured by H = H_osc + 2*delta - 1."""
        return HPolynomial.from_roots(2 * i + 2 * self.delta for i in self.beta.scheme.phys_indices)

    def a_pow(self, sign: int, n: int) -> tuple:
        return (self.am if sign < 0 else self.ap,) * n

    # ladder families
    def A(self, sign: int, n: int = 1) -> LadderOp:
        """A_n^(+/-) = A^- (a^(+/-))^n A^+."""
        key = ("A", sign, n)
        if key not in self._cache:
            nm = ("A+" if sign > 0 else "A-") + (f"_{n}" if n != 1 else "")
            self._cache[key] = LadderOp(
                nm, "A", RAISING if sign > 0 else LOWERING, 2 * n, (self.Ad,) + self.a_pow(sign, n) + (self.Au,)
            )
        return self._cache[key]

    def B(self, sign: int, n: int = 1) -> LadderOp:
        """B_n^(+/-) = B^- (a^(+/-))^n B^+."""
        key = ("B", sign, n)
        if key not in self._cache:
            nm = ("B+" if sign > 0 else "B-") + (f"_{n}" if n != 1 else "")
            self._cache[key] = LadderOp(
                nm, "B", RAISING if sign > 0 else LOWERING, 2 * n, (self.Bd,) + self.a_pow(sign, n) + (self.Bu,)
            )
        return self._cache[key]

    def C(self, sign: int, n: int = 1) -> LadderOp:
        """C^-_n = B^- (a^-)^(n-1) A^+ and C^+_n = A^- (a^+)^(n-1) B^+ for n >= 1;
        for n <= -1, C^-_n = B^- (a^+)^|n| A^+ and C^+_n = A^- (a^-)^|n| B^+."""
        if n == 0:
            raise ValueError("C_0 is not defined")
        if n < 0 and -n > self.delta:
            raise ValueError(f"C_{n} requires |n| <= {self.delta}")
        key = ("C", sign, n)
        if key not in self._cache:
            if n > 0:
                mid = self.a_pow(sign, n - 1)
                step = 2 * self.delta + 2 * (n - 1)
            else:
                mid = self.a_pow(-sign, -n)
                step = 2 * self.delta + 2 * n
            nm = ("C+" if sign > 0 else "C-") + (f"_{n}" if n != 1 else "")
            facs = (self.Bd,) + mid + (self.Au,) if sign < 0 else (self.Ad,) + mid + (self.Bu,)
            direction = RAISING if sign > 0 else LOWERING
            if step < 0:
                step, direction = -step, (LOWERING if sign > 0 else RAISING)
            self._cache[key] = LadderOp(nm, "C", direction, step, facs)
        return self._cache[key]

    def basic_ops(self) -> list:
        return [(op.name, op) for op in (self.A(-1), self.A(1), self.B(-1), self.B(1), self.C(-1), self.C(1))]

    def op(self, name: str) -> LadderOp:
        """Look up 'A-', 'B+_2', 'C-_-1', ... by name."""
        kind, rest = name[0], name[1:]
        sign = -1 if rest[0] == "-" else 1
        n = int(rest[2:]) if rest[1:2] == "_" else 1
        return {"A": self.A, "B": self.B, "C": self.C}[kind](sign, n)

    # helpers for identities
    def hl(self, p: HPolynomial, op: DiffOp) -> DiffOp:
        return hpoly_left(p, self.H, op)

    def hr(self, op: DiffOp, p: HPolynomial) -> DiffOp:
        return hpoly_right(op, p, self.H)

    def hop(self, p: HPolynomial) -> DiffOp:
        return hpoly_left(p, self.H, DiffOp.identity())


def secondary_ladder(tr: Trinity, kind: str, n: int, sign: int = -1) -> LadderOp:
    """kind in {'A_n', 'B_n', 'C_n', 'C_minus_n'}; see :class:`Trinity`."""
    if kind == "A_n":
        return tr.A(sign, n)
    if kind == "B_n":
        return tr.B(sign, n)
    if kind == "C_n":
        return tr.C(sign, n)
    if kind == "C_minus_n":
        if not 1 <= n <= tr.delta - 1:
            raise ValueError(f"C_minus_n needs 1 <= n <= {tr.delta - 1}")
        return tr.C(sign, -n)
    raise ValueError(f"unknown secondary family {kind!r}")


def build_trinity(alpha: ExtendedSystem, beta: ExtendedSystem) -> Trinity:
    """Pair complementary minimal alpha/beta systems; their potentials must agree."""
    if not (alpha.scheme.is_alpha and beta.scheme.is_beta):
        raise SchemeError("build_trinity needs an alpha system and a beta system")
    if alpha.potential != beta.potential:
        raise SchemeError(f"{alpha.scheme.label} and {beta.scheme.label} give different potentials")
    sp = predict_spectrum(alpha.scheme)
    if sp.n_plus == 0:
        raise SchemeError("equidistant system: no trinity")
    if 2 * sp.delta - 1 != alpha.shift:
        raise SchemeError("alpha scheme is not minimal")
    return Trinity(alpha, beta, sp)


@lru_cache(maxsize=64)
def trinity_for(scheme: Scheme) -> Trinity:
    """Trinity of the system produced by any admissible scheme."""
    sp = predict_spectrum(scheme)
    a, b = minimal_pair(sp)
    if complementary_scheme(a) != b.canonical():
        raise SchemeError("complementary index rule disagrees with the spectrum")
    return build_trinity(build_system(a), build_system(b))


def product_to_hpoly(l1: LadderOp, l2: LadderOp, tr: Trinity) -> HPolynomial:
    """P with l1 o l2 = P(H-breve); raises :class:`NotCentral` otherwise."""
    return match_hpoly(chain(l1.factors + l2.factors), tr.hpow)


def product_polynomial_of(tr: Trinity, op: LadderOp) -> HPolynomial:
    """P with op^dagger o op = P(H-breve), by exact expansion."""
    return match_hpoly(chain(op.adjoint_factors() + op.factors), tr.hpow)


def commutator_defect(tr: Trinity, op: LadderOp) -> DiffOp:
    """[H, L] - (+/-)step L; zero iff the ladder relation holds."""
    L = op.op
    return compose(tr.H, L) - compose(L, tr.H) - L * op.signed_step


# -- identity catalog --------------------------------------------------------

VERIFIED = "Verified"
FAILED = "Failed"
SKIPPED = "Skipped"


@dataclass
class IdentityRecord:
    name: str
    statement: str
    lhs: Callable[[], object]
    rhs: Callable[[], object]
    order: int
    status: str = "Pending"
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "statement": self.statement, "order": self.order,
                "status": self.status, "detail": self.detail}


def _first_diff(a, b) -> str:
    if isinstance(a, DiffOp) and isinstance(b, DiffOp):
        n = max(len(a.coeffs), len(b.coeffs))
        for k in range(n):
            ca, cb = a.coeff(k), b.coeff(k)
            if ca != cb:
                sa, sb = str(ca), str(cb)
                return f"D^{k}: lhs {sa[:200]} vs rhs {sb[:200]}"
        return "equal"
    return f"lhs {a} vs rhs {b}"


def verify_identity(rec: IdentityRecord, max_order: int | None = None) -> IdentityRecord:
    """Exact comparison of both sides; failures carry the first differing coefficient."""
    if max_order is not None and rec.order > max_order:
        rec.status = SKIPPED
        rec.detail = f"operator order {rec.order} exceeds the verification limit {max_order}"
        return rec
    try:
        a, b = rec.lhs(), rec.rhs()
    except NotCentral as exc:
        rec.status, rec.detail = FAILED, f"not a polynomial in H: {exc}"
        return rec
    if a == b:
        rec.status, rec.detail = VERIFIED, ""
    else:
        rec.status, rec.detail = FAILED, _first_diff(a, b)
    return rec


def _hp(roots, lead=1) -> HPolynomial:
    return HPolynomial.from_roots(roots, lead)


def identity_catalog(tr: Trinity) -> list:
    """All identities applicable to the system (unverified; sides built lazily)."""
    H, d, s = tr.H, tr.delta, tr.sign
    PA, PB = tr.PA, tr.PB
    np_, nm = tr.n_plus, tr.n_minus
    oA, oB, oC = 2 * np_ + 1, 4 * nm + 1, np_ + 2 * nm
    Am, Ap, Bm, Bp, Cm, Cp = tr.A(-1), tr.A(1), tr.B(-1), tr.B(1), tr.C(-1), tr.C(1)
    recs: list = []

    def add(name, stmt, lhs, rhs, order):
        recs.append(IdentityRecord(name, stmt, lhs, rhs, order))

    def prod(*ops):
        return lambda: chain([f for o in ops for f in (o.factors if isinstance(o, LadderOp) else (o,))])

    one = DiffOp.identity()
    # intertwining relations
    add("AnH0Hn", "A^- H = H-breve A^-", lambda: compose(tr.Ad, tr.Hsrc), lambda: compose(H, tr.Ad), np_ + 2)
    add("BHbrHE", "B^- H = (H-breve + 2Delta) B^-", lambda: compose(tr.Bd, tr.Hsrc),
        lambda: compose(H + 2 * d, tr.Bd), 2 * nm + 2)
    add("P_A", f"A^- A^+ = P_A(H-breve) = {PA}", prod(tr.Ad, tr.Au), lambda: tr.hop(PA), 2 * np_)
    add("P_A(H)", "A^+ A^- = P_A(H)", prod(tr.Au, tr.Ad), lambda: hpoly_left(PA, tr.Hsrc, one), 2 * np_)
    add("P_B", f"B^+ B^- = P_B(H) = {PB}", prod(tr.Bu, tr.Bd), lambda: hpoly_left(PB, tr.Hsrc, one), 4 * nm)
    add("P_B(H-breve)", "B^- B^+ = P_B(H-breve + 2Delta)", prod(tr.Bd, tr.Bu), lambda: tr.hop(PB.shift(2 * d)), 4 * nm)
    # commutations and conjugation
    for L, o in ((Am, oA), (Ap, oA), (Bm, oB), (Bp, oB), (Cm, oC), (Cp, oC)):
        sg = "+" if L.signed_step > 0 else "-"
        add("HcommuteA,B,C", f"[H-breve, {L.name}] = {sg}{L.step} {L.name}",
            (lambda L=L: commutator_defect(tr, L)), lambda: DiffOp(), o + 2)
    for L, M, o in ((Am, Ap, oA), (Bm, Bp, oB), (Cm, Cp, oC)):
        add("adjoint", f"({L.name})^dagger = {M.name}", (lambda L=L: L.op.adjoint()), (lambda M=M: M.op), o)
    # quadratic products
    PcA = _hp([2 * d]) * PA.shift(-2) * PA
    PcB = _hp([0]) * PB.shift(2 * d - 2) * PB.shift(2 * d)
    PcC = PB * PA
    add("AB2list1", f"A+ A- = P_calA(H-breve) = {PcA}", prod(Ap, Am), lambda: tr.hop(PcA), 2 * oA)
    add("AB2list1", "A- A+ = P_calA(H-breve + 2)", prod(Am, Ap), lambda: tr.hop(PcA.shift(2)), 2 * oA)
    add("AB2list1+B", f"B+ B- = P_calB(H-breve) = {PcB}", prod(Bp, Bm), lambda: tr.hop(PcB), 2 * oB)
    add("AB2list1+B", "B- B+ = P_calB(H-breve + 2)", prod(Bm, Bp), lambda: tr.hop(PcB.shift(2)), 2 * oB)
    add("AB2list2", f"C+ C- = P_calC(H-breve) = {PcC}", prod(Cp, Cm), lambda: tr.hop(PcC), 2 * oC)
    add("AB2list2", "C- C+ = P_calC(H-breve + 2Delta)", prod(Cm, Cp), lambda: tr.hop(PcC.shift(2 * d)), 2 * oC)
    # complementarity
    add("AB-n+2n-", f"A^+ B^- = ({s}) (a^-)^{d}", prod(tr.Au, tr.Bd), lambda: chain(tr.a_pow(-1, d)) * s, d)
    add("AB-n+2n-", f"B^+ A^- = ({s}) (a^+)^{d}", prod(tr.Bu, tr.Ad), lambda: chain(tr.a_pow(1, d)) * s, d)
    add("complementident", "P_A(t) P_B(t + 2Delta) = prod_{j<Delta} (t - 2j)",
        lambda: (PA * PB.shift(2 * d)).poly(), lambda: _hp([2 * j for j in range(d)]).poly(), 0)
    add("complementident", f"C-_(-{d}) = ({s}) P_A(H-breve) P_B(H-breve + 2Delta)",
        lambda: tr.C(-1, -d).op, lambda: tr.hop(PA * PB.shift(2 * d)) * s, 2 * d)
    # bridge between A and B
    add("B-indenityA-", "(H-2Delta+2) P_A(H+2) B- = (H+2) P_B(H+2Delta) A-",
        lambda: tr.hl(_hp([2 * d - 2]) * PA.shift(2), Bm.op), lambda: tr.hl(_hp([-2]) * PB.shift(2 * d), Am.op),
        oB + 2 + 2 * np_)
    add("B-indenityA-", "B+ P_A(H+2) (H-2Delta+2) = A+ P_B(H+2Delta) (H+2)",
        lambda: tr.hr(Bp.op, _hp([2 * d - 2]) * PA.shift(2)), lambda: tr.hr(Ap.op, _hp([-2]) * PB.shift(2 * d)),
        oB + 2 + 2 * np_)
    # generation of C from A
    polyAC = _hp([])
    for l in range(d):
        polyAC = polyAC * PA.shift(2 * l)
    add("AC-relation", f"(A-)^{d} = ({s}) prod_l P_A(H+2l) C-", prod(*([Am] * d)),
        lambda: tr.hl(polyAC, Cm.op) * s, d * oA)
    polyAC1 = _hp([])
    for j in range(d - 1):
        polyAC1 = polyAC1 * PA.shift(2 * j)
    add("AC-relation", f"H (A-)^{d - 1} = ({s}) prod_(j<{d - 1}) P_A(H+2j) C-_(-1)",
        lambda: tr.hl(_hp([0]), chain([f for _ in range(d - 1) for f in Am.factors])),
        lambda: tr.hl(polyAC1, tr.C(-1, -1).op) * s, (d - 1) * oA + 2)
    # quadratic compositions with C
    add("AB2list1+", "(A+)^2 = P_A(H-2) A+_2", prod(Ap, Ap), lambda: tr.hl(PA.shift(-2), tr.A(1, 2).op), 2 * oA)
    add("AB2list1+", f"(C+)^2 = ({s}) C+_{d + 1}", prod(Cp, Cp), lambda: tr.C(1, d + 1).op * s, 2 * oC)
    add("AB2list1+", f"A+ C- = ({s}) (H-2Delta) A-_{d - 1}", prod(Ap, Cm),
        lambda: tr.hl(_hp([2 * d]), tr.A(-1, d - 1).op) * s, oA + oC)
    add("AB2list1+", "(A-)^2 = A-_2 P_A(H-2)", prod(Am, Am), lambda: tr.hr(tr.A(-1, 2).op, PA.shift(-2)), 2 * oA)
    add("AB2list1+", f"(C-)^2 = ({s}) C-_{d + 1}", prod(Cm, Cm), lambda: tr.C(-1, d + 1).op * s, 2 * oC)
    add("AB2list1+", f"C+ A- = ({s}) A+_{d - 1} (H-2Delta)", prod(Cp, Am),
        lambda: tr.hr(tr.A(1, d - 1).op, _hp([2 * d])) * s, oA + oC)
    add("AB2list2+", "A+ C+ = P_A(H-2) C+_2", prod(Ap, Cp), lambda: tr.hl(PA.shift(-2), tr.C(1, 2).op), oA + oC)
    add("AB2list2+", f"A- C- = ({s}) A-_{d + 1}", prod(Am, Cm), lambda: tr.A(-1, d + 1).op * s, oA + oC)
    add("AB2list2+", "A- C+ = P_A(H+2) C+_(-1)", prod(Am, Cp), lambda: tr.hl(PA.shift(2), tr.C(1, -1).op), oA + oC)
    add("AB2list2+", "C- A- = C-_2 P_A(H-2)", prod(Cm, Am), lambda: tr.hr(tr.C(-1, 2).op, PA.shift(-2)), oA + oC)
    add("AB2list2+", f"C+ A+ = ({s}) A+_{d + 1}", prod(Cp, Ap), lambda: tr.A(1, d + 1).op * s, oA + oC)
    add("AB2list2+", "C- A+ = C-_(-1) P_A(H+2)", prod(Cm, Ap), lambda: tr.hr(tr.C(-1, -1).op, PA.shift(2)), oA + oC)
    # powers versus secondary operators
    for n in (2, 3):
        pl = _hp([])
        for j in range(1, n):
            pl = pl * PA.shift(2 * j)
        add("A-n=An-", f"(A-)^{n} = prod_(j=1..{n - 1}) P_A(H+2j) A-_{n}", prod(*([Am] * n)),
            (lambda pl=pl, n=n: tr.hl(pl, tr.A(-1, n).op)), n * oA)
    add("A-n=An-", "(B-)^2 = P_B(H+2Delta+2) B-_2", prod(Bm, Bm),
        lambda: tr.hl(PB.shift(2 * d + 2), tr.B(-1, 2).op), 2 * oB)
    recs.extend(_example_identities(tr))
    return recs


def _example_identities(tr: Trinity) -> list:
    """Relations stated for specific systems, gated on the alpha scheme."""
    J = tr.alpha.scheme.nonphys_indices
    H = tr.H
    Am, Ap, Bm, Bp, Cm, Cp = tr.A(-1), tr.A(1), tr.B(-1), tr.B(1), tr.C(-1), tr.C(1)
    recs: list = []

    def add(name, stmt, lhs, rhs, order):
        recs.append(IdentityRecord(name, stmt, lhs, rhs, order))

    def prod(*ops):
        return lambda: chain([f for o in ops for f in (o.factors if isinstance(o, LadderOp) else (o,))])

    hp = _hp
    if J == (2,):
        add("ABa3", "A^+ B_2^- = -(a^-)^3", prod(tr.Au, tr.Bd), lambda: -chain(tr.a_pow(-1, 3)), 3)
        add("ABa3", "B_2^+ A^- = -(a^+)^3", prod(tr.Bu, tr.Ad), lambda: -chain(tr.a_pow(1, 3)), 3)
        add("A+A-Hbr", "A+ A- = H(H-2)(H-6)", prod(Ap, Am), lambda: tr.hop(hp([0, 2, 6])), 6)
        add("A+A-Hbr", "A- A+ = H(H+2)(H-4)", prod(Am, Ap), lambda: tr.hop(hp([0, -2, 4])), 6)
        add("HC+-3", "[H, C-] = -6 C-", lambda: compose(H, Cm.op) - compose(Cm.op, H), lambda: Cm.op * -6, 5)
        add("HC+-3", "[H, C+] = +6 C+", lambda: compose(H, Cp.op) - compose(Cp.op, H), lambda: Cp.op * 6, 5)
        add("B+B-Hbr", "C+ C- = H(H-8)(H-10)", prod(Cp, Cm), lambda: tr.hop(hp([0, 8, 10])), 6)
        add("B+B-Hbr", "C- C+ = (H+6)(H-2)(H-4)", prod(Cm, Cp), lambda: tr.hop(hp([-6, 2, 4])), 6)
        add("B+newB-", "B+ B- = H(H-2)(H-6)(H-4)^2", prod(Bp, Bm), lambda: tr.hop(hp([0, 2, 6, 4, 4])), 10)
        add("B+newB-", "B- B+ = H(H+2)(H-4)(H-2)^2", prod(Bm, Bp), lambda: tr.hop(hp([0, -2, 4, 2, 2])), 10)
        add("B2+6", "B_2^- H = (H-breve+6) B_2^-", lambda: compose(tr.Bd, tr.Hsrc), lambda: compose(H + 6, tr.Bd), 4)
        add("B2+6", "B_2^+ B_2^- = (H-8)(H-10)", prod(tr.Bu, tr.Bd),
            lambda: hpoly_left(hp([8, 10]), tr.Hsrc, DiffOp.identity()), 4)
        add("B2+6", "B_2^- B_2^+ = (H-breve-2)(H-breve-4)", prod(tr.Bd, tr.Bu), lambda: tr.hop(hp([2, 4])), 4)
        add("BnACH-4", "B- = A- (H-4)", lambda: Bm.op, lambda: tr.hr(Am.op, hp([4])), 5)
        add("BnACH-4", "B-_2 = (A-)^2", lambda: tr.B(-1, 2).op, prod(Am, Am), 6)
        add("BnACH-4", "B-_3 = -C- (H-2)(H-4)", lambda: tr.B(-1, 3).op, lambda: -tr.hr(Cm.op, hp([2, 4])), 7)
        add("BnACH-4", "B-_4 = -C-_2 (H-2)(H-4)", lambda: tr.B(-1, 4).op, lambda: -tr.hr(tr.C(-1, 2).op, hp([2, 4])), 8)
        add("BnACH-4", "B-_5 = -C- (A-)^2", lambda: tr.B(-1, 5).op, lambda: -chain(Cm.factors + Am.factors * 2), 9)
        add("BnACH-4", "B-_6 = (C-)^2 (H-2)(H-4)", lambda: tr.B(-1, 6).op,
            lambda: tr.hr(chain(Cm.factors * 2), hp([2, 4])), 10)
        add("B-ndef", "C-_(-1) = -A-_2", lambda: tr.C(-1, -1).op, lambda: -tr.A(-1, 2).op, 4)
        add("B-ndef", "C+_(-1) = -A+_2", lambda: tr.C(1, -1).op, lambda: -tr.A(1, 2).op, 4)
        add("B-ndef", "C-_(-2) = -(H-2) A-", lambda: tr.C(-1, -2).op, lambda: -tr.hl(hp([2]), Am.op), 5)
        add("B-ndef", "C+_(-2) = -(H-4) A+", lambda: tr.C(1, -2).op, lambda: -tr.hl(hp([4]), Ap.op), 5)
        add("A-3HB-", "(A-)^3 = -H(H+2)(H+4) C-", prod(Am, Am, Am), lambda: -tr.hl(hp([0, -2, -4]), Cm.op), 9)
        add("A-3HB-", "(A-)^3 = -C- (H-6)(H-4)(H-2)", prod(Am, Am, Am), lambda: -tr.hr(Cm.op, hp([6, 4, 2])), 9)
        for n in (2, 3):
            add("A-n=An-", f"(A-)^{n} = A-_{n} prod_(j<{n}) (H-2j)", prod(*([Am] * n)),
                (lambda n=n: tr.hr(tr.A(-1, n).op, hp([2 * j for j in range(1, n)]))), 3 * n)
        add("BnACH-4", "(B-)^2 = H(H-2) B-_2", prod(Bm, Bm), lambda: tr.hl(hp([0, 2]), tr.B(-1, 2).op), 10)
    elif J == (4,):
        # the analogue of A-3HB- needs Delta = 5 factors for the orders to match
        add("A5HB-", "(A-)^5 = -C- (H-10)(H-8)(H-6)(H-4)(H-2)", prod(*([Am] * 5)),
            lambda: -tr.hr(Cm.op, hp([10, 8, 6, 4, 2])), 15)
        add("B-A-H2H4H6", "B- = (H-2)(H-4)(H-6) A-", lambda: Bm.op, lambda: tr.hl(hp([2, 4, 6]), Am.op), 9)
    elif J == (2, 3):
        add("polynom+2", "A+ A- = H(H-2)^2(H-4)(H-8)", prod(Ap, Am), lambda: tr.hop(hp([0, 2, 2, 4, 8])), 10)
        add("polynom+2", "A- A+ = (H+2)H^2(H-2)(H-6)", prod(Am, Ap), lambda: tr.hop(hp([-2, 0, 0, 2, 6])), 10)
        add("polynom+2B", "B+ B- = H(H-4)(H-6)^2(H-8)", prod(Bp, Bm), lambda: tr.hop(hp([0, 4, 6, 6, 8])), 10)
        add("polynom+2B", "B- B+ = (H+2)(H-2)(H-4)^2(H-6)", prod(Bm, Bp), lambda: tr.hop(hp([-2, 2, 4, 4, 6])), 10)
        add("B2A2a", "B_2^+ A_2^- = (a^+)^4", prod(tr.Bu, tr.Ad), lambda: chain(tr.a_pow(1, 4)), 4)
        add("B2A2a", "A_2^+ B_2^- = (a^-)^4", prod(tr.Au, tr.Bd), lambda: chain(tr.a_pow(-1, 4)), 4)
        add("BAn+=2n-=1", "H B- = (H-4) A-", lambda: tr.hl(hp([0]), Bm.op), lambda: tr.hl(hp([4]), Am.op), 7)
        add("BAn+=2n-=1", "B+ H = A+ (H-4)", lambda: tr.hr(Bp.op, hp([0])), lambda: tr.hr(Ap.op, hp([4])), 7)
        add("A4HB-", "(A-)^4 = C- (H-8)^2(H-6)^2(H-4)^2(H-2)(H-10)", prod(*([Am] * 4)),
            lambda: tr.hr(Cm.op, hp([8, 8, 6, 6, 4, 4, 2, 10])), 20)
    return recs


def verify_catalog(records: list, max_order: int | None = None) -> list:
    for r in records:
        verify_identity(r, max_order)
    return records
