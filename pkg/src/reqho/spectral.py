"""Spectrum structure, complementary schemes, kernels and spectrum-generating walks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from .exactalg import QuasiRational
from .oscillator import nonphysical, physical
from .scheme import Scheme, SchemeError, lowest_level, present_levels

if TYPE_CHECKING:  # pragma: no cover
    from .ladder import LadderOp, Trinity

PHYSICAL_CLOSED = "PhysicalClosedForm"
NONPHYSICAL_CLOSED = "NonPhysicalClosedForm"
NON_ELEMENTARY = "NonElementary"


@dataclass(frozen=True)
class SpectrumModel:
    """Predicted spectrum in the ground-zero gauge.

    ``levels`` lists the separated levels followed by the first few levels of
    the equidistant part; :meth:`energy` extends it indefinitely. Gaps
    (``n_gaps``, half-counts of missing levels) and valence ``bands``
    ((start energy, count) pairs) are both ordered from the top down, so
    band i sits just below gap i.
    """

    levels: tuple
    n_plus: int
    n_minus: int
    n_gaps: tuple
    g_plus_1: int
    delta: Fraction
    bands: tuple

    @property
    def separated(self) -> tuple:
        return self.levels[: self.n_plus]

    @property
    def missing(self) -> tuple:
        """Missing energies below 2*delta."""
        have = set(self.separated)
        return tuple(Fraction(2 * k) for k in range(int(self.delta)) if 2 * k not in have)

    def energy(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("level index must be non-negative")
        if k < self.n_plus:
            return self.levels[k]
        return 2 * self.delta + 2 * (k - self.n_plus)

    def first(self, k: int) -> list:
        return [self.energy(i) for i in range(k)]

    def index_of(self, e) -> int | None:
        e = Fraction(e)
        if e >= 2 * self.delta:
            d = e - 2 * self.delta
            return self.n_plus + int(d / 2) if d.denominator == 1 and d % 2 == 0 else None
        try:
            return self.separated.index(e)
        except ValueError:
            return None

    def is_level(self, e) -> bool:
        return self.index_of(e) is not None

    def band_of(self, k: int) -> int | None:
        """Index (top-down) of the valence band containing level k, if separated."""
        for b, (start, count) in enumerate(self.bands):
            i0 = self.index_of(start)
            if i0 <= k < i0 + count:
                return b
        return None

    def as_dict(self) -> dict:
        return {
            "levels": [str(e) for e in self.levels],
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "n_gaps": list(self.n_gaps),
            "g_plus_1": self.g_plus_1,
            "delta": str(self.delta),
            "bands": [[str(s), c] for s, c in self.bands],
        }


def spectrum_from_levels(levels: list, extra: int = 6) -> SpectrumModel:
    """Band/gap structure from a level set that is equidistant from some point on.

    ``levels`` must contain every level below the equidistant part (any
    integers m, ordered or not); energies are 2*(m - min).
    """
    ms = sorted(set(levels))
    m0 = ms[0]
    es = [2 * (m - m0) for m in ms]
    # start of the unbroken tail: last missing level + 1
    tail = 0
    for a, b in zip(es, es[1:]):
        if b - a > 2:
            tail = b
    sep = [e for e in es if e < tail]
    n_plus = len(sep)
    delta = Fraction(tail // 2)
    if n_plus == 0:
        lv = tuple(Fraction(2 * k) for k in range(extra))
        return SpectrumModel(lv, 0, 0, (), 0, Fraction(0), ())
    missing = int(delta) - n_plus
    if missing % 2:
        raise SchemeError("odd number of missing levels: scheme is not admissible")
    bands = []
    gaps = []  # missing-level counts, bottom-up
    start, count = sep[0], 1
    for a, b in zip(sep, sep[1:]):
        if b - a == 2:
            count += 1
        else:
            bands.append((Fraction(start), count))
            gaps.append((b - a - 2) // 2)
            start, count = b, 1
    bands.append((Fraction(start), count))
    gaps.append((tail - sep[-1] - 2) // 2)
    if any(g % 2 for g in gaps):
        raise SchemeError("a gap with an odd number of missing levels: scheme is not admissible")
    gaps = [g // 2 for g in gaps]
    lv = tuple(Fraction(e) for e in sep) + tuple(Fraction(tail + 2 * k) for k in range(extra))
    return SpectrumModel(
        levels=lv,
        n_plus=n_plus,
        n_minus=missing // 2,
        n_gaps=tuple(reversed(gaps)),
        g_plus_1=len(bands),
        delta=delta,
        bands=tuple(reversed(bands)),
    )


def predict_spectrum(scheme: Scheme, extra: int = 6) -> SpectrumModel:
    """Delete physical-seed levels, insert non-physical-seed levels, re-gauge to 0."""
    top = max([n for _, n in scheme.seeds], default=0) + 2
    lv = present_levels(scheme, top + 1)
    # odd gaps mean real zeros in the Wronskian
    for a, b in zip(lv, lv[1:]):
        if (b - a - 1) % 2:
            raise SchemeError(f"{scheme.label} is not admissible (odd gap in the level set)")
    assert lv[0] == lowest_level(scheme)
    return spectrum_from_levels(lv, extra)


def is_minimal(scheme: Scheme) -> bool:
    if scheme.is_alpha:
        return 0 not in scheme.nonphys_indices
    if scheme.is_beta:
        return 0 not in scheme.phys_indices
    return False


def complementary_scheme(scheme: Scheme) -> Scheme:
    """Minimal alpha <-> minimal beta scheme producing the same system."""
    if scheme.size == 0:
        raise SchemeError("empty scheme has no complement")
    if scheme.is_alpha:
        js = scheme.nonphys_indices
        if 0 in js:
            raise SchemeError("alpha scheme containing psi-_0 is not minimal")
        jp = max(js)
        drop = {jp - j for j in js}
        return Scheme.beta(i for i in range(jp + 1) if i not in drop)
    if scheme.is_beta:
        ii = scheme.phys_indices
        if 0 in ii:
            raise SchemeError("beta scheme containing psi_0 is not minimal")
        ip = max(ii)
        return Scheme.alpha(sorted(ip - m for m in range(ip + 1) if m not in ii))
    raise SchemeError("mixed schemes have no complementary scheme")


def minimal_pair(spec: SpectrumModel) -> tuple:
    """Minimal alpha and beta schemes realising a spectrum (requires n_plus >= 1)."""
    if spec.n_plus == 0:
        raise SchemeError("equidistant spectrum: no gapped system")
    d = int(spec.delta)
    alpha = Scheme.alpha(sorted(d - 1 - int(e) // 2 for e in spec.separated))
    beta = Scheme.beta(int(e) // 2 for e in spec.missing)
    return alpha, beta


# -- kernels ---------------------------------------------------------------


@dataclass(frozen=True)
class KernelMember:
    name: str
    energy: Fraction
    cls: str
    state: QuasiRational | None = field(default=None, compare=False, repr=False)

    def as_dict(self) -> dict:
        return {"state": self.name, "energy": str(self.energy), "class": self.cls}


@dataclass
class KernelReport:
    operator: str
    members: list
    polynomial_roots: list
    defects: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.defects

    def energies(self) -> list:
        return sorted(m.energy for m in self.members)

    def names(self) -> list:
        return [m.name for m in self.members]

    def physical(self) -> list:
        return [m for m in self.members if m.cls == PHYSICAL_CLOSED]

    def as_dict(self) -> dict:
        return {
            "operator": self.operator,
            "members": [m.as_dict() for m in self.members],
            "polynomial_roots": [str(r) for r in self.polynomial_roots],
            "defects": list(self.defects),
        }


def candidates_at(tr: "Trinity", e: Fraction) -> list:
    """Closed-form eigenfunctions of H-breve at energy e: (name, QuasiRational)."""
    d2 = 2 * tr.delta
    out = []
    sep = tr.spectrum

    def level_name(fallback: str) -> str:
        k = sep.index_of(e)
        return f"Psi_{k}" if k is not None else fallback

    n = (e - d2) / 2
    if n.denominator == 1 and n >= 0:
        out.append((f"A-psi_{n}", tr.alpha.down(physical(int(n)).state)))
    n = (d2 - 2 - e) / 2
    if n.denominator == 1 and n >= 0:
        out.append((f"A-psi-_{n}", tr.alpha.down(nonphysical(int(n)).state)))
    n = e / 2
    if n.denominator == 1 and n >= 0:
        out.append((f"B-psi_{n}", tr.beta.down(physical(int(n)).state)))
    n = (-2 - e) / 2
    if n.denominator == 1 and n >= 0:
        out.append((f"B-psi-_{n}", tr.beta.down(nonphysical(int(n)).state)))
    res = []
    for name, st in out:
        if st.is_zero():
            continue
        if st.is_normalizable():
            name = level_name(name)
        res.append((name, st))
    return res


def _independent(states: list) -> list:
    """Indices of a maximal linearly independent subset (exact, greedy)."""
    from .exactalg.ratfn import common_denominator

    chosen: list = []
    for idx, st in enumerate(states):
        grp = [states[i] for i in chosen if states[i].gexp == st.gexp] + [st]
        if len(grp) == 1:
            chosen.append(idx)
            continue
        den = common_denominator([g.rat for g in grp])
        polys = [(g.rat * den).to_poly() for g in grp]
        n = max(p.degree for p in polys) + 1
        if _rank([[p.coeff(k) for k in range(n)] for p in polys]) == len(polys):
            chosen.append(idx)
    return chosen


def _rank(rows: list) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncol = len(m[0]) if m else 0
    for c in range(ncol):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def kernel_classify(op: "LadderOp", tr: "Trinity") -> KernelReport:
    """Closed-form kernel members of a ladder operator, plus tilde placeholders.

    The candidate energies are the roots of P(H) with op^dagger op = P(H).
    """
    from .ladder import product_polynomial_of

    hp = product_polynomial_of(tr, op)
    roots = sorted(r for r, m in hp.roots for _ in range(m))
    report = KernelReport(op.name, [], roots)
    if hp.residual.degree > 0:
        report.defects.append(f"non-rational factor {hp.residual} in product polynomial")
    for e, mult in hp.roots:
        cands = [(nm, st) for nm, st in candidates_at(tr, e)]
        hits = [(nm, st) for nm, st in cands if op.apply(st).is_zero()]
        keep = _independent([st for _, st in hits])
        hits = [hits[i] for i in keep]
        for nm, st in hits:
            cls = PHYSICAL_CLOSED if st.is_normalizable() else NONPHYSICAL_CLOSED
            report.members.append(KernelMember(nm, e, cls, st))
        extra = mult - len(hits)
        if extra < 0:
            report.defects.append(f"{len(hits)} independent kernel states at E={e} exceed root multiplicity {mult}")
        partner = hits[0][0] if hits else None
        for t in range(max(extra, 0)):
            nm = f"tilde({partner})" if partner else f"tilde@E={e}"
            if t:
                nm += f"#{t + 1}"
            report.members.append(KernelMember(nm, e, NON_ELEMENTARY, None))
    report.members.sort(key=lambda m: (m.energy, m.cls != PHYSICAL_CLOSED, m.name))
    return report


# -- spectrum-generating walk ----------------------------------------------


@dataclass
class Walk:
    """Applying ``word`` (first element first) to Psi_source gives factor * Psi_target."""

    source: int
    target: int
    word: tuple
    factor: Fraction

    def describe(self) -> str:
        w = " ".join(reversed(self.word)) if self.word else "1"
        return f"{w} Psi_{self.source} = ({self.factor}) Psi_{self.target}"


def level_state(tr: "Trinity", k: int) -> QuasiRational:
    """Closed-form representative of the physical level k."""
    sp = tr.spectrum
    if k >= sp.n_plus:
        return tr.alpha.down(physical(k - sp.n_plus).state)
    e = sp.energy(k)
    return tr.beta.down(physical(int(e) // 2).state)


def spectrum_generating_walk(tr: "Trinity", source: int, target: int, max_len: int | None = None) -> Walk:
    """Shortest word in the trinity mapping Psi_source to a multiple of Psi_target.

    Breadth-first over level indices; each edge is an exact application.
    """
    sp = tr.spectrum
    if max_len is None:
        max_len = 2 * (int(sp.delta) + sp.n_plus) + 4
    cap = max(sp.energy(source), sp.energy(target)) + 4 * sp.delta + 4
    ops = tr.basic_ops()
    seen = {source: ((), Fraction(1))}
    reps = {source: level_state(tr, source)}
    q = deque([source])
    while q:
        k = q.popleft()
        word, fac = seen[k]
        if k == target:
            return Walk(source, target, word, fac)
        if len(word) >= max_len:
            continue
        for name, op in ops:
            e = sp.energy(k) + op.signed_step
            if e < 0 or e > cap:
                continue
            j = sp.index_of(e)
            if j is None or j in seen:
                continue
            img = op.apply(reps[k])
            if img.is_zero():
                continue
            if j not in reps:
                reps[j] = level_state(tr, j)
            c = img.ratio_to(reps[j])
            if c is None:
                raise ArithmeticError(f"{name} Psi_{k} is not proportional to Psi_{j}")
            seen[j] = (word + (name,), fac * c)
            q.append(j)
    raise ArithmeticError(f"no word from Psi_{source} to Psi_{target} within length {max_len}")
