import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reqho.exactalg import (
    Poly,
    QuasiPoly,
    RationalFn,
    count_real_roots,
    format_poly,
    poly_gcd,
    squarefree_decomposition,
)
from reqho.exactalg import _pykernels

coeff_lists = st.lists(st.integers(-9, 9), min_size=1, max_size=9)


def P(*c):
    return Poly(c)


class TestPoly:
    def test_diff(self):
        assert P(-2, 0, 4).diff() == P(0, 8)

    def test_gcd_monic(self):
        a = P(1, 0, 2)
        assert poly_gcd(a, a * a) == P(Fraction(1, 2), 0, 1)

    def test_mul(self):
        assert P(0, 2) * P(0, 2) == P(0, 0, 4)

    def test_canonical_zero(self):
        assert P(0, 0, 0) == Poly()
        assert Poly().degree < 0
        assert P(1, 2, 0).degree == 1

    def test_divmod_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(P(1, 2), Poly())

    def test_format(self):
        assert format_poly(P(3, 0, 12, 0, 4)) == "4x^4+12x^2+3"

    def test_squarefree(self):
        p = P(-1, 1) ** 3 * P(1, 0, 1)
        parts = squarefree_decomposition(p)
        assert any(f == P(-1, 1) and e == 3 for f, e in parts)

    @settings(max_examples=60, deadline=None)
    @given(coeff_lists, coeff_lists, coeff_lists)
    def test_divmod_round_trip(self, pc, qc, rc):
        p, q = Poly(pc), Poly(qc)
        if not q:
            return
        r = Poly(rc[: max(q.degree, 0)]) if q.degree > 0 else Poly()
        quo, rem = divmod(p * q + r, q)
        assert quo == p and rem == r


def _bisection_count(coeffs, lo=-60.0, hi=60.0, n=200001):
    # oracle: sign changes of p on a fine grid inside a root bound, plus exact zeros
    xs = np.linspace(lo, hi, n)
    ys = np.polyval(list(reversed(coeffs)), xs)
    s = np.sign(ys)
    return int(np.count_nonzero(s[:-1] * s[1:] < 0) + np.count_nonzero(s == 0))


class TestSturm:
    def test_examples(self):
        assert count_real_roots(P(1, 0, 2)) == 0
        assert count_real_roots(P(3, 0, 12, 0, 4)) == 0
        assert count_real_roots(P(-2, 0, 4)) == 2

    def test_interval(self):
        p = P(-2, 0, 4)
        assert count_real_roots(p, (0, math.inf)) == 1
        assert count_real_roots(P(-1, 1), (1, 2)) == 1  # closed interval

    def test_zero_poly(self):
        with pytest.raises(ValueError):
            count_real_roots(Poly())

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(-6, 6), min_size=0, max_size=4), st.lists(st.integers(1, 5), min_size=0, max_size=2))
    def test_against_bisection(self, roots, quad):
        # distinct integer-free half-integer roots keep the oracle unambiguous
        rts = sorted(set(Fraction(2 * r + 1, 2) for r in roots))
        p = Poly([1])
        for r in rts:
            p = p * Poly([-r, 1])
        for c in quad:
            p = p * Poly([c, 0, 1])  # no real roots
        if p.degree > 6:
            return
        assert count_real_roots(p) == len(rts)
        assert count_real_roots(p) == _bisection_count([float(c) for c in p.coeffs])


class TestQuasi:
    def test_diff_gaussian(self):
        g = QuasiPoly(P(1), Fraction(-1))
        assert g.diff() == QuasiPoly(P(0, -1), Fraction(-1))

    def test_diff_nonphysical(self):
        s = QuasiPoly(P(1, 0, 2), Fraction(1))
        assert s.diff() == QuasiPoly(P(0, 5, 0, 2), Fraction(1))

    def test_product_gexp(self):
        e = QuasiPoly(P(1), Fraction(1))
        assert (e * e).gexp == 2

    @settings(max_examples=40, deadline=None)
    @given(coeff_lists, coeff_lists, st.integers(-2, 2))
    def test_leibniz(self, pc, fc, s):
        p, f = Poly(pc), QuasiPoly(Poly(fc), Fraction(s))
        if not f.poly:
            return
        lhs = (f * p).diff()
        rhs = f.diff() * p + f * p.diff()
        assert lhs == rhs


class TestRationalFn:
    def test_reduced(self):
        r = RationalFn(P(1, 0, 2) * P(0, 1), P(1, 0, 2) ** 2)
        assert r.num == P(0, 1) and r.den == P(1, 0, 2)

    def test_den_positive(self):
        r = RationalFn(P(1), P(-1, 0, -2))
        assert r.den.lc > 0

    def test_arith(self):
        a = RationalFn(P(1), P(1, 0, 2))
        assert a + a == RationalFn(P(2), P(1, 0, 2))
        assert (a * RationalFn(P(1, 0, 2))).is_const()

    def test_diff(self):
        a = RationalFn(P(1), P(0, 1))
        assert a.diff() == RationalFn(P(-1), P(0, 0, 1))


class TestKernelsParity:
    """The compiled backend must agree with the pure-Python one."""

    @settings(max_examples=50, deadline=None)
    @given(coeff_lists, coeff_lists)
    def test_ops(self, a, b):
        from reqho.exactalg._kernels import K

        A, B = _pykernels.strip(list(a)), _pykernels.strip(list(b))
        assert K.mul(A, B) == _pykernels.mul(A, B)
        assert K.add(A, B) == _pykernels.add(A, B)
        assert K.diff(A) == _pykernels.diff(A)
        if B:
            assert K.pdivrem(A, B) == _pykernels.pdivrem(A, B)
            assert K.divexact(_pykernels.mul(A, B), B) == A

    def test_big(self):
        from reqho.exactalg._kernels import K

        a = [3**80, -(2**70), 5]
        b = [7**60, 1]
        assert K.mul(a, b) == _pykernels.mul(a, b)
