"""Exact real-root counting with Sturm sequences."""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import Poly, squarefree_part


def sturm_sequence(p: Poly) -> list:
    """Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k)."""
    seq = [p, p.diff()]
    while seq[-1]:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        # a positive rescaling keeps sign patterns and limits coefficient growth
        c, prim = r.primitive()
        seq.append(prim if c > 0 else -prim)
    return [q for q in seq if q]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _variations(signs) -> int:
    s = [t for t in signs if t]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at(seq: list, x) -> list:
    if x == math.inf:
        return [_sign(q.lc) for q in seq]
    if x == -math.inf:
        return [_sign(q.lc) * (-1) ** q.degree for q in seq]
    return [_sign(q(x)) for q in seq]


def count_real_roots(p: Poly, interval: tuple | None = None) -> int:
    """Number of distinct real roots of p in the closed interval [a, b].

    ``interval`` defaults to the whole real line; endpoints may be
    ``-math.inf`` / ``math.inf`` or exact rationals.
    """
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    if p.degree < 1:
        return 0
    a, b = interval if interval is not None else (-math.inf, math.inf)
    if not isinstance(a, float):
        a = Fraction(a)
    if not isinstance(b, float):
        b = Fraction(b)
    if a > b:
        return 0
    sq = squarefree_part(p)
    seq = sturm_sequence(sq)
    n = _variations(_signs_at(seq, a)) - _variations(_signs_at(seq, b))
    if not isinstance(a, float) and sq(a) == 0:
        n += 1
    return n


def has_real_roots(p: Poly) -> bool:
    return count_real_roots(p) > 0
