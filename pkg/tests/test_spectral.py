from fractions import Fraction

import pytest

from reqho.ladder import product_polynomial_of
from reqho.scheme import Scheme, SchemeError
from reqho.spectral import (
    NON_ELEMENTARY,
    NONPHYSICAL_CLOSED,
    PHYSICAL_CLOSED,
    complementary_scheme,
    kernel_classify,
    level_state,
    minimal_pair,
    predict_spectrum,
    spectrum_generating_walk,
)


def test_predict_examples():
    sp = predict_spectrum(Scheme.alpha([2]))
    assert sp.first(4) == [0, 6, 8, 10] and sp.n_plus == 1 and sp.delta == 3
    assert predict_spectrum(Scheme.alpha([2, 3])).first(4) == [0, 2, 8, 10]
    f = predict_spectrum(Scheme.alpha([2, 5, 6, 7]))
    assert f.delta == 8 and [c for _, c in f.bands] == [1, 3]
    assert f.g_plus_1 == 2 and f.n_plus == 4 and f.n_minus == 2


def test_predict_rejects():
    with pytest.raises(SchemeError):
        predict_spectrum(Scheme.beta([1]))


def test_equidistant():
    sp = predict_spectrum(Scheme(()))
    assert sp.first(3) == [0, 2, 4] and sp.delta == 0 and sp.bands == ()


@pytest.mark.parametrize("a,b", [([2], [1, 2]), ([2, 3], [2, 3]), ([2, 5, 6, 7], [3, 4, 6, 7]), ([4], [1, 2, 3, 4])])
def test_complementary(a, b):
    A, B = Scheme.alpha(a), Scheme.beta(b)
    assert complementary_scheme(A) == B
    assert complementary_scheme(B) == A
    assert predict_spectrum(A).first(12) == predict_spectrum(B).first(12)
    assert minimal_pair(predict_spectrum(A)) == (A, B)


def test_complementary_errors():
    with pytest.raises(SchemeError):
        complementary_scheme(Scheme.alpha([0, 2]))
    with pytest.raises(SchemeError):
        complementary_scheme(Scheme((("phys", 1), ("nonphys", 2))))


def _members(rep):
    return [(m.name, m.energy, m.cls) for m in rep.members]


def test_kernel_simplest(simplest):
    tr = simplest
    r = kernel_classify(tr.A(-1), tr)
    assert _members(r) == [("Psi_0", 0, PHYSICAL_CLOSED), ("A-psi-_1", 2, NONPHYSICAL_CLOSED),
                           ("Psi_1", 6, PHYSICAL_CLOSED)]
    r = kernel_classify(tr.A(1), tr)
    assert {(m.name, m.energy) for m in r.members} == {("Psi_0", 0), ("A-psi-_3", -2), ("A-psi-_0", 4)}
    r = kernel_classify(tr.C(-1), tr)
    assert [(m.name, m.energy) for m in r.members] == [("Psi_0", 0), ("Psi_2", 8), ("Psi_3", 10)]
    r = kernel_classify(tr.B(-1), tr)
    classes = [m.cls for m in r.members]
    assert classes.count(PHYSICAL_CLOSED) == 2 and classes.count(NONPHYSICAL_CLOSED) == 2
    assert [m.energy for m in r.members if m.cls == NON_ELEMENTARY] == [4]


def test_kernel_two_level(two_level):
    r = kernel_classify(two_level.A(-1), two_level)
    assert sorted(m.name for m in r.members) == sorted(["Psi_0", "Psi_1", "Psi_2", "tilde(Psi_1)", "A-psi-_1"])


@pytest.mark.parametrize("which", ["simplest", "psi4", "two_level", "figure1"])
def test_kernel_accounting(which, request):
    tr = request.getfixturevalue(which)
    for _, op in tr.basic_ops():
        r = kernel_classify(op, tr)
        assert r.ok
        assert sorted(m.energy for m in r.members) == r.polynomial_roots
        assert product_polynomial_of(tr, op).degree == op.order
    cm, cp = kernel_classify(tr.C(-1), tr), kernel_classify(tr.C(1), tr)
    assert len(cm.physical()) == tr.delta
    assert len(cp.physical()) == 0


@pytest.mark.parametrize("which", ["simplest", "two_level", "figure1"])
def test_band_annihilation(which, request):
    tr = request.getfixturevalue(which)
    sp = tr.spectrum
    for start, count in sp.bands:
        top = sp.index_of(start) + count - 1
        st = level_state(tr, top)
        for i in range(count):
            st = tr.B(-1).apply(st)
            assert st.is_zero() == (i == count - 1)


def test_walk_examples(simplest, figure1):
    w = spectrum_generating_walk(simplest, 1, 0)
    assert w.word in (("C-",), ("B-",), ("A-",)) or len(w.word) == 1
    for tr in (simplest, figure1):
        img = tr.C(-1).apply(level_state(tr, tr.n_plus))
        assert img.ratio_to(level_state(tr, 0)) not in (None, 0)
        for j in range(tr.n_plus, tr.n_plus + 3):
            img = tr.A(1).apply(level_state(tr, j))
            assert img.ratio_to(level_state(tr, j + 1)) not in (None, 0)


def test_walk_c_minus_from_nplus(simplest):
    img = simplest.C(-1).apply(level_state(simplest, 1))
    assert img.ratio_to(level_state(simplest, 0)) not in (None, 0)
