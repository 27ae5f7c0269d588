from fractions import Fraction

import pytest

from reqho.diffop import DiffOp, compose
from reqho.exactalg import Poly
from reqho.ladder import (
    FAILED,
    SKIPPED,
    VERIFIED,
    HPolynomial,
    IdentityRecord,
    NotCentral,
    build_trinity,
    identity_catalog,
    match_hpoly,
    product_to_hpoly,
    secondary_ladder,
    verify_identity,
)
from reqho.dckat import build_system
from reqho.scheme import Scheme, SchemeError


def hp(*roots, lead=1):
    return HPolynomial.from_roots(roots, lead)


def test_hpolynomial_basics():
    p = hp(0, 2, 6)
    assert p.poly() == Poly([0, 12, -8, 1])
    assert str(p) == "(H-6)(H-2)H"
    assert p.shift(2) == hp(-2, 0, 4)
    assert HPolynomial.from_poly(Poly([1, 0, 1])).residual == Poly([1, 0, 1])


def test_basic_orders_and_steps(simplest, two_level):
    assert simplest.A(-1).order == 3 and simplest.A(1).order == 3
    assert simplest.C(-1).step == 6
    assert two_level.C(1).order == 4 and two_level.C(1).step == 8
    for tr in (simplest, two_level):
        np_, nm = tr.n_plus, tr.n_minus
        assert tr.A(1).op.order == 2 * np_ + 1
        assert tr.B(1).op.order == 4 * nm + 1
        assert tr.C(1).op.order == np_ + 2 * nm


@pytest.mark.parametrize("name", ["A-", "A+", "B-", "B+", "C-", "C+"])
def test_commutation_exact(simplest, two_level, psi4, name):
    for tr in (simplest, two_level, psi4):
        L = tr.op(name)
        d = compose(tr.H, L.op) - compose(L.op, tr.H) - L.op * L.signed_step
        assert d.is_zero()


def test_adjoint_pairs(simplest):
    for k in "ABC":
        assert simplest.op(k + "-").op.adjoint() == simplest.op(k + "+").op


def test_product_to_hpoly_examples(simplest, two_level):
    tr = simplest
    assert product_to_hpoly(tr.A(1), tr.A(-1), tr) == hp(0, 2, 6)
    assert product_to_hpoly(tr.C(1), tr.C(-1), tr) == hp(0, 8, 10)
    assert product_to_hpoly(tr.B(1), tr.B(-1), tr) == hp(0, 2, 6, 4, 4)
    assert product_to_hpoly(two_level.A(1), two_level.A(-1), two_level) == hp(0, 2, 2, 4, 8)


def test_product_to_hpoly_not_central(simplest):
    with pytest.raises(NotCentral):
        product_to_hpoly(simplest.A(-1), simplest.A(-1), simplest)
    with pytest.raises(NotCentral):
        match_hpoly(DiffOp([0, Poly.x(), 1]), simplest.H)


def test_secondary(simplest):
    tr = simplest
    assert secondary_ladder(tr, "A_n", 1, -1) is tr.A(-1)
    assert tr.C(-1, -1).op == -tr.A(-1, 2).op
    assert tr.C(-1, -2).op == -tr.hl(hp(2), tr.A(-1).op)
    for n in (1, 2):
        L = secondary_ladder(tr, "C_minus_n", n, -1)
        assert L.signed_step == -(2 * tr.delta - 2 * n)
    assert secondary_ladder(tr, "C_n", 2, 1).step == 2 * tr.delta + 2
    assert secondary_ladder(tr, "B_n", 3, -1).step == 6
    with pytest.raises(ValueError):
        secondary_ladder(tr, "C_minus_n", tr.delta, -1)


@pytest.mark.parametrize("name", ["A-", "A+", "B-", "B+", "C-", "C+"])
def test_secondary_commutations(simplest, name):
    tr = simplest
    kind, sign = name[0], (-1 if name[1] == "-" else 1)
    for n in (2, 3):
        L = {"A": tr.A, "B": tr.B, "C": tr.C}[kind](sign, n)
        d = compose(tr.H, L.op) - compose(L.op, tr.H) - L.op * L.signed_step
        assert d.is_zero()


def test_verify_identity_examples(simplest, two_level):
    tr = simplest
    rec = IdentityRecord("ABa3", "", lambda: compose(tr.Au, tr.Bd),
                         lambda: -(tr.am * tr.am * tr.am), 3)
    assert verify_identity(rec).status == VERIFIED
    tl = two_level
    rec = IdentityRecord("BAn+=2n-=1", "", lambda: tl.hl(hp(0), tl.B(-1).op), lambda: tl.hl(hp(4), tl.A(-1).op), 7)
    assert verify_identity(rec).status == VERIFIED


def test_verify_identity_failure_diff(simplest):
    tr = simplest
    rec = IdentityRecord("wrong", "", lambda: tr.A(-1).op, lambda: tr.A(1).op, 3)
    verify_identity(rec)
    assert rec.status == FAILED and rec.detail.startswith("D^")


def test_verify_identity_skipped(simplest):
    rec = IdentityRecord("big", "", lambda: 1 / 0, lambda: 0, 100)
    assert verify_identity(rec, max_order=40).status == SKIPPED


@pytest.mark.parametrize("which", ["simplest", "psi4", "two_level"])
def test_catalog_all_verified(which, request):
    tr = request.getfixturevalue(which)
    recs = identity_catalog(tr)
    for r in recs:
        verify_identity(r)
        assert r.status == VERIFIED, (r.name, r.statement, r.detail)


def test_catalog_contents(simplest, psi4, two_level):
    names = {r.name for r in identity_catalog(simplest)}
    for n in ("HcommuteA,B,C", "AB2list1", "AB2list1+B", "AB2list2", "AB-n+2n-", "complementident",
              "B-indenityA-", "AC-relation", "AB2list1+", "AB2list2+", "A-3HB-", "BnACH-4", "B-ndef", "ABa3"):
        assert n in names
    assert "A5HB-" not in names
    assert "B-A-H2H4H6" in {r.name for r in identity_catalog(psi4)}
    assert {"A4HB-", "B2A2a", "polynom+2"} <= {r.name for r in identity_catalog(two_level)}


def test_complementident_polynomial(simplest, two_level, figure1):
    for tr in (simplest, two_level, figure1):
        lhs = (tr.PA * tr.PB.shift(2 * tr.delta)).poly()
        assert lhs == hp(*range(0, 2 * tr.delta, 2)).poly()


def test_build_trinity_rejects_mismatch():
    a = build_system(Scheme.alpha([2]))
    b = build_system(Scheme.beta([2, 3]))
    with pytest.raises(SchemeError):
        build_trinity(a, b)


def test_a4hb_measured(two_level):
    # the printed multiplicities give degree 8 and order 4 + 16 = 20 = (A-)^4: consistent
    rec = next(r for r in identity_catalog(two_level) if r.name == "A4HB-")
    assert verify_identity(rec).status == VERIFIED
