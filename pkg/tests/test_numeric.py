import numpy as np
import pytest

from reqho.dckat import build_intertwiner, build_potential, eigenstates, build_system
from reqho.diffop import DiffOp
from reqho.exactalg import Poly, RationalFn
from reqho.numeric import (
    Grid,
    PoleOnNode,
    annihilation_threshold,
    apply_numeric,
    apply_numeric_fn,
    cosine_similarity,
    eigensolve,
    fd_weights,
    tilde_state,
    wronskian_numeric,
)
from reqho.oscillator import hermite_nonphysical, hermite_physical, ladder_a, qho_hamiltonian
from reqho.scheme import Scheme
from reqho.spectral import level_state


def test_grid():
    g = Grid(10, 4000)
    assert g.h == pytest.approx(0.005) and len(g.nodes) == 3999
    with pytest.raises(ValueError):
        Grid(1, 2)


def test_fd_weights_second_derivative():
    w = fd_weights(np.array([-1, 0, 1]), 2)[2]
    assert np.allclose(w, [1, -2, 1])


def test_eigensolve_oscillator():
    sp = eigensolve(RationalFn(Poly([-1, 0, 1])), Grid(10, 4000), 6)
    assert np.allclose(sp.eigenvalues, [0, 2, 4, 6, 8, 10], atol=1e-3)
    norms = np.sum(sp.eigenvectors**2, axis=1) * sp.grid.h
    assert np.allclose(norms, 1)


def test_eigensolve_k_range():
    with pytest.raises(ValueError):
        eigensolve(RationalFn(Poly([0, 0, 1])), Grid(10, 40), 20)


def test_second_order_convergence():
    v = build_potential(Scheme.alpha([2]))
    exact = np.array([0, 6, 8, 10])
    e1 = np.abs(eigensolve(v, Grid(10, 1000), 4).eigenvalues - exact).max()
    e2 = np.abs(eigensolve(v, Grid(10, 2000), 4).eigenvalues - exact).max()
    assert 3.5 < e1 / e2 < 4.5


def test_tilde_state_ground():
    from scipy.special import dawsn

    g = Grid(10, 4000)
    psi0 = hermite_physical(0).state.as_rational()
    ts = tilde_state(psi0, 0.0, g)
    m = ts.mask
    x = g.nodes[m]
    # psi0 = exp(-x^2/2): psi0 * int_0^x exp(t^2) dt = dawsn(x) exp(x^2/2)
    exact = dawsn(x) * np.exp(x**2 / 2) / float(psi0.rat(0.0)) ** 2
    assert np.max(np.abs(ts.values[m] - exact)) <= 1e-6 * np.max(np.abs(exact))
    assert np.nanmax(np.abs(wronskian_numeric(ts)[m] - 1)) < 1e-6


def test_tilde_state_residual_gauss():
    g = Grid(10, 4000)
    ts = tilde_state(hermite_physical(0).state.as_rational(), 0.0, g, method="gauss")
    r = apply_numeric(qho_hamiltonian(-1), ts.values, g)
    m = ts.mask & np.isfinite(r)
    assert np.max(np.abs(r[m])) <= 1e-6 * np.max(np.abs(ts.values[m]))


def test_apply_numeric_ground_annihilation():
    g = Grid(10, 4000)
    psi0 = hermite_physical(0).state(g.nodes)
    r = apply_numeric(ladder_a("-"), psi0, g)
    assert np.nanmax(np.abs(r)) <= 1e-6 * psi0.max()


def test_apply_numeric_ladder(simplest):
    g = Grid(10, 4000)
    tr = simplest
    psi2 = level_state(tr, 2)(g.nodes)
    out = apply_numeric(tr.A(-1).op, psi2, g)
    assert cosine_similarity(out, level_state(tr, 1)(g.nodes)) > 1 - 1e-8


def test_pole_shift():
    g = Grid(1, 10)  # x = 0 is a node
    op = DiffOp([RationalFn(Poly([1]), Poly.x())])
    with pytest.raises(PoleOnNode):
        apply_numeric(op, np.ones(9), g)
    g2, vals = apply_numeric_fn(op, lambda x: np.ones_like(x), g)
    assert g2.offset == pytest.approx(g.h / 2) and np.all(np.isfinite(vals))


def test_nonelementary_member(simplest):
    """B- annihilates the second solution at E=4 (double root), A- does not."""
    tr = simplest
    phi = tr.alpha.down(hermite_nonphysical(0).state)
    g = Grid(10, 4000)
    ts = tilde_state(phi, 1.5, g, method="gauss")
    for op, killed in ((tr.B(-1).op, True), (tr.A(-1).op, False)):
        r = apply_numeric(op, ts.values, g)
        m = ts.mask & np.isfinite(r)
        below = np.max(np.abs(r[m])) <= annihilation_threshold(op, ts.values, g, ts.mask)
        assert below == killed


@pytest.mark.parametrize("which", ["simplest", "two_level"])
def test_ladder_on_eigenvectors(which, request):
    tr = request.getfixturevalue(which)
    g = Grid(10, 4000)
    sp = eigensolve(tr.alpha.potential, g, 8)
    E = list(np.round(sp.eigenvalues).astype(int))
    inner = np.zeros(len(g.nodes), dtype=bool)
    inner[50:-50] = True
    kernels = {}
    from reqho.spectral import kernel_classify

    for name, L in tr.basic_ops():
        kern = {int(m.energy) for m in kernel_classify(L, tr).physical()}
        for i, e in enumerate(E):
            t = e + L.signed_step
            if e in kern:
                v = apply_numeric(L.op, sp.eigenvectors[i], g)
                assert np.nanmax(np.abs(v[inner])) <= annihilation_threshold(L.op, sp.eigenvectors[i], g, inner)
            elif t in E:
                v = apply_numeric(L.op, sp.eigenvectors[i], g)
                assert cosine_similarity(v[inner], sp.eigenvectors[E.index(t)][inner]) >= 1 - 1e-4
