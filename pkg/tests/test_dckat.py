import itertools
import random
from fractions import Fraction

import pytest

from reqho.dckat import (
    Inadmissible,
    build_intertwiner,
    build_potential,
    build_system,
    chain_intertwiner,
    check_admissible,
    eigenstates,
    log_derivative_term,
    potential_from_intertwiner,
    product_polynomial_check,
    raw_wronskian,
    wronskian,
)
from reqho.diffop import DiffOp, adjoint, apply, compose
from reqho.exactalg import Poly, QuasiPoly, RationalFn
from reqho.ladder import HPolynomial, match_hpoly
from reqho.oscillator import hermite_nonphysical, hermite_physical, ladder_a, qho_hamiltonian
from reqho.scheme import Scheme, SchemeError, maya_nodeless
from reqho.spectral import predict_spectrum

X = Poly.x()


def R(num, den=1):
    return RationalFn(Poly(num), Poly(den) if not isinstance(den, int) else Poly([den]))


def test_wronskian_examples():
    w = wronskian([hermite_nonphysical(2).state, hermite_nonphysical(3).state])
    assert w.gexp == 2 and w.poly.monic() == Poly([3, 0, 0, 0, 4]).monic()
    w = wronskian([hermite_physical(1).state, hermite_physical(2).state])
    assert w.gexp == -2 and w.poly.monic() == Poly([1, 0, 2]).monic()
    s = hermite_physical(3).state
    assert wronskian([s]) == s


def test_check_admissible():
    assert check_admissible(Scheme.alpha([2]))
    assert check_admissible(Scheme.beta([1, 2]))
    r = check_admissible(Scheme.beta([1]))
    assert not r and r.root_count == 1
    with pytest.raises(SchemeError):
        check_admissible(Scheme(()))


def test_build_system_rejects():
    with pytest.raises(Inadmissible):
        build_system(Scheme.beta([1]))


def test_potential_simplest():
    v = build_potential(Scheme.alpha([2]))
    expect = RationalFn(Poly([3, 0, 1])) + RationalFn(Poly([-8, 0, 16]), Poly([1, 0, 2]) ** 2)
    assert v == expect


def test_potential_two_level():
    v = build_potential(Scheme.alpha([2, 3]))
    expect = RationalFn(Poly([3, 0, 1])) + RationalFn(Poly([0, 0, -288, 0, 0, 0, 128]), Poly([3, 0, 0, 0, 4]) ** 2)
    assert v == expect


def test_intertwiner_examples():
    a = build_intertwiner(Scheme.alpha([2]))
    assert a == DiffOp([R([0, -1]) - RationalFn(Poly([0, 4]), Poly([1, 0, 2])), 1])
    assert build_intertwiner(Scheme.beta([0])) == ladder_a("-")
    assert build_intertwiner(Scheme.beta([1])) == DiffOp([R([0, 1]) - RationalFn(Poly([1]), X), 1])


def test_adjoint_examples():
    assert adjoint(DiffOp.D()) == -DiffOp.D()
    assert adjoint(ladder_a("-")) == ladder_a("+")
    a = build_intertwiner(Scheme.alpha([2]))
    assert adjoint(adjoint(a)) == a


def test_compose_apply_examples():
    assert compose(ladder_a("+"), ladder_a("-")) == qho_hamiltonian(-1)
    a = build_intertwiner(Scheme.alpha([2]))
    out = apply(a, hermite_physical(0).state)
    assert out.rat.den.monic() == Poly([Fraction(1, 2), 0, 1])
    assert compose(a, DiffOp.identity()) == a


def test_product_polynomial_examples():
    sys2 = build_system(Scheme.alpha([2]))
    prod = compose(sys2.intertwiner_up, sys2.intertwiner_down)
    assert prod == qho_hamiltonian(5)
    b = build_system(Scheme.beta([1, 2]))
    m = compose(b.intertwiner_up, b.intertwiner_down)
    assert match_hpoly(m, qho_hamiltonian(5)) == HPolynomial.from_roots([8, 10])
    assert compose(ladder_a("+"), ladder_a("-")) == qho_hamiltonian(-1)
    assert product_polynomial_check(Scheme.alpha([2])) == [0]


def test_beta_alpha_displacement():
    # same potential up to the 2*Delta constant: V_beta(raw) = V_alpha(raw) + 2 Delta
    va = build_potential(Scheme.alpha([2]), shift=0)
    vb = build_potential(Scheme.beta([1, 2]), shift=0)
    assert vb == va + 2 * 3


def _admissible_schemes(max_index=7, max_size=4, delta_cap=6, limit=None):
    seeds = [("phys", i) for i in range(max_index + 1)] + [("nonphys", j) for j in range(max_index + 1)]
    out = []
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(seeds, size):
            s = Scheme(combo)
            if not maya_nodeless(s):
                continue
            if predict_spectrum(s).delta > delta_cap:
                continue
            out.append(s)
    return out


def _sample_schemes(k=40, seed=7):
    pool = _admissible_schemes()
    rnd = random.Random(seed)
    return rnd.sample(pool, min(k, len(pool)))


@pytest.mark.parametrize("scheme", _sample_schemes(), ids=lambda s: s.label)
def test_system_properties(scheme):
    adm = check_admissible(scheme)
    assert adm and not adm.defects
    sys_ = build_system(scheme)
    a = sys_.intertwiner_down
    assert a.is_monic() and a.order == scheme.size
    for st in scheme.states:
        assert apply(a, st.state).is_zero()
    # intertwining A H_source = H-breve A
    assert compose(a, sys_.source_hamiltonian) == compose(sys_.hamiltonian, a)
    roots = product_polynomial_check(sys_)
    assert len(roots) == scheme.size
    # potential from the cofactor intertwiner matches the Wronskian formula
    assert potential_from_intertwiner(a, RationalFn(Poly([sys_.shift, 0, 1]))) == sys_.potential


@pytest.mark.parametrize("scheme", _sample_schemes(12, seed=3), ids=lambda s: s.label)
def test_permutation_invariance(scheme):
    states = [s.state for s in scheme.states]
    w0 = raw_wronskian(states)
    a0 = build_intertwiner(states)
    for perm in itertools.islice(itertools.permutations(states), 1, 4):
        w = raw_wronskian(list(perm))
        assert w.poly in (w0.poly, -w0.poly)
        assert build_intertwiner(list(perm)) == a0


def test_chain_matches_cofactor():
    for s in (Scheme.alpha([2]), Scheme.alpha([2, 3]), Scheme.beta([1, 2])):
        assert chain_intertwiner(s) == build_intertwiner(s)


def test_screen_disagreement_reported():
    # the screen and Sturm agree on all small schemes
    for s in _admissible_schemes(max_index=4, max_size=2):
        assert not check_admissible(s).defects


def test_eigenstates_ground_zero():
    sys_ = build_system(Scheme.alpha([2]))
    es = eigenstates(sys_, 3)
    assert [e for e, _ in es] == [0, 6, 8]
    h = sys_.hamiltonian
    for e, st in es:
        assert apply(h, st).ratio_to(st) == e
    assert es[0][1].rat.den.monic() == Poly([Fraction(1, 2), 0, 1])


def test_log_derivative():
    w = QuasiPoly(Poly([1, 0, 2]), 1)
    assert log_derivative_term(w) == RationalFn(Poly([4, 0, -8]), Poly([1, 0, 2]) ** 2) + 1
